"""
Closed-form cardinalities, evaluated in exact integer arithmetic.

Every function takes the chain size n >= 1.  Sums whose lower bound
exceeds the upper bound are empty and contribute 0.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from math import comb
from typing import Iterable

__all__ = [
    "card_PIM",
    "card_IM",
    "card_PIO",
    "card_IO",
    "card_N_PIO",
    "card_N_PIM",
    "nilpotent_triple_sums",
    "reversing_intersection_card",
    "interval_count",
    "nilpotent_count_for_domain",
    "REFERENCE_TABLE",
    "CountReport",
    "reports_to_csv",
    "reports_to_json",
]

# |IM_n|, |PIM_n|, |N(PIM_n)| for n = 1..12
REFERENCE_TABLE = {
    "IM": (1, 4, 13, 36, 91, 218, 505, 1144, 2551, 5622, 12277, 26612),
    "PIM": (2, 9, 37, 123, 352, 913, 2219, 5163, 11662, 25809, 56305, 121579),
    "N_PIM": (1, 3, 11, 35, 95, 231, 521, 1117, 2315, 4693, 9395, 18523),
}


def _check_n(n):
    if n < 1:
        raise ValueError(f"chain size must be at least 1, got {n}")


def _half(x):
    q, r = divmod(x, 2)
    assert r == 0, f"{x} is odd"
    return q


def card_PIM(n: int) -> int:
    _check_n(n)
    return (n + 3) * 2 ** (n + 1) - _half(n**3 + 5 * n**2 + 12 * n + 10)


def card_IM(n: int) -> int:
    _check_n(n)
    return (n + 1) * 2 ** (n - 1) - n


def card_PIO(n: int) -> int:
    _check_n(n)
    return (n + 3) * 2**n - n**2 - 3 * n - 2


def card_IO(n: int) -> int:
    """(n+1)2^(n-2), with |IO_1| = 1 by convention (the value 1/2 is not integral)."""
    _check_n(n)
    if n == 1:
        return 1
    return (n + 1) * 2 ** (n - 2)


def card_N_PIO(n: int) -> int:
    _check_n(n)
    return 2 ** (n + 2) - n**2 - 3 * n - 3


def nilpotent_triple_sums(n: int) -> tuple[int, int]:
    """The two triple sums counting order-reversing nilpotents with image
    size at least 2: images left of the domain, and images right of it."""
    _check_n(n)
    left = right = 0
    for r in range(2, n - 1):
        for j in range(1, n - r + 2):
            for k in range(2, j):
                left += (j - k) * comb(r - 1, k - 1)
            for k in range(2, n - j - r + 2):
                right += (n - j - r - k + 2) * comb(r - 1, k - 1)
    return left, right


def card_N_PIM(n: int) -> int:
    left, _ = nilpotent_triple_sums(n)
    return card_N_PIO(n) + 2 * left


def reversing_intersection_card(n: int) -> int:
    """Number of order-reversing members of PIO_n: the constants and 0_n."""
    _check_n(n)
    return _half(n * n * (n + 1)) + 1


def interval_count(n: int) -> int:
    """Number of non-empty intervals of the n-chain."""
    _check_n(n)
    return _half(n * (n + 1))


def nilpotent_count_for_domain(n: int, j: int, r: int) -> int:
    """Non-null order-reversing nilpotents of PIM_n with domain [j, j+r-1]."""
    _check_n(n)
    if not (1 <= r <= n - 1 and 1 <= j <= n - r + 1):
        raise IndexError(f"need 1 <= r <= n-1 and 1 <= j <= n-r+1; got n={n}, j={j}, r={r}")
    below = sum((j - k) * comb(r - 1, k - 1) for k in range(1, j))
    above = sum((n - j - r - k + 2) * comb(r - 1, k - 1) for k in range(1, n - j - r + 2))
    return below + above


@dataclass
class CountReport:
    """One row of a count comparison; ``agree`` is False if any two present values differ."""

    n: int
    family: str
    formula: int
    enumerated: int | None = None
    oracle: int | None = None

    @property
    def agree(self) -> bool:
        values = {v for v in (self.formula, self.enumerated, self.oracle) if v is not None}
        return len(values) == 1

    def as_dict(self) -> dict:
        d = asdict(self)
        d["agree"] = self.agree
        return d


_FIELDS = ("n", "family", "formula", "enumerated", "oracle", "agree")


def reports_to_csv(reports: Iterable[CountReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rep in reports:
        row = rep.as_dict()
        writer.writerow({k: ("" if row[k] is None else row[k]) for k in _FIELDS})
    return buf.getvalue()


def reports_to_json(reports: Iterable[CountReport]) -> str:
    return json.dumps([rep.as_dict() for rep in reports], indent=2)
