"""
Nilpotent elements of PIM_n (relative to its zero, the empty map).

Nilpotency is decided by iterating powers until the zero appears or a
non-zero power repeats; no a-priori bound on the nilpotency index is
assumed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .chain import (
    PartialTransformation,
    compose,
    domain,
    image,
    is_order_preserving,
    is_order_reversing,
    zero,
)
from .enumeration import enumerate_constructive

__all__ = [
    "NilpotencyVerdict",
    "is_nilpotent",
    "image_meets_domain",
    "lemma3_equivalence_check",
    "disjointness_criterion_holds",
    "enumerate_nilpotents",
    "nilpotents_by_domain",
    "nonclosure_witness",
    "split_by_orientation",
    "witness_power_histogram",
]

_NILPOTENT_FAMILIES = ("PIM", "PIO", "PIM_r")


@dataclass(frozen=True)
class NilpotencyVerdict:
    nilpotent: bool
    witness_power: int | None = None
    cycle_detected_at: int | None = None

    def __bool__(self):
        return self.nilpotent


def is_nilpotent(a: PartialTransformation, n: int | None = None) -> NilpotencyVerdict:
    """Least k with a^k = 0_n, or the exponent at which a power repeats."""
    if n is not None and n != len(a):
        raise ValueError(f"transformation acts on {len(a)} points, not {n}")
    empty = zero(len(a))
    seen = set()
    power, k = a, 1
    while True:
        if power == empty:
            return NilpotencyVerdict(True, witness_power=k)
        if power in seen:
            return NilpotencyVerdict(False, cycle_detected_at=k)
        seen.add(power)
        power = compose(power, a)
        k += 1


def image_meets_domain(a: PartialTransformation) -> bool:
    return bool(image(a) & domain(a))


def lemma3_equivalence_check(n: int) -> bool:
    """For every order-reversing a in PIM_n: a nilpotent iff Im(a) and Dom(a) are disjoint."""
    if n > 7:
        raise ValueError("the exhaustive check is supported for n <= 7")
    return all(
        bool(is_nilpotent(a)) == (not image_meets_domain(a))
        for a in enumerate_constructive(n, "PIM_r")
    )


disjointness_criterion_holds = lemma3_equivalence_check


def _check_family(family):
    if family in ("IM", "IO", "IM_r"):
        raise ValueError(
            f"{family} consists of full transformations and has no zero; nilpotency is only "
            "defined in the partial families PIM, PIO, PIM_r"
        )
    if family not in _NILPOTENT_FAMILIES:
        raise ValueError(f"unsupported family {family!r}")


def enumerate_nilpotents(n: int, family: str = "PIM") -> frozenset[PartialTransformation]:
    _check_family(family)
    return frozenset(a for a in enumerate_constructive(n, family) if is_nilpotent(a))


def nilpotents_by_domain(n: int) -> dict[tuple[int, int], int]:
    """Counts of non-null order-reversing nilpotents keyed by (j, r), Dom = [j, j+r-1].

    Every admissible (j, r) with r <= n-1 is present, possibly with count 0.
    """
    counts: Counter = Counter()
    for a in enumerate_nilpotents(n, "PIM_r"):
        dom = domain(a)
        if dom:
            counts[(min(dom), len(dom))] += 1
    return {(j, r): counts[(j, r)] for r in range(1, n) for j in range(1, n - r + 2)}


def nonclosure_witness(n: int) -> tuple[PartialTransformation, PartialTransformation] | None:
    """First pair (a, b) of nilpotents, in sorted order, whose product is not nilpotent."""
    nil = sorted(enumerate_nilpotents(n))
    for a in nil:
        for b in nil:
            if not is_nilpotent(compose(a, b)):
                return a, b
    return None


def split_by_orientation(n: int) -> dict[str, int]:
    """Nilpotent counts of PIM_n split into order-preserving and order-reversing-only."""
    nil = enumerate_nilpotents(n)
    preserving = sum(1 for a in nil if is_order_preserving(a))
    reversing_only = sum(1 for a in nil if is_order_reversing(a) and not is_order_preserving(a))
    return {"total": len(nil), "order_preserving": preserving, "reversing_only": reversing_only}


def witness_power_histogram(n: int, disjoint_only: bool = False) -> Counter:
    """How often each nilpotency index occurs among the nilpotents of PIM_n.

    With ``disjoint_only`` only elements whose image misses their domain are
    counted; this is a measurement, nothing is asserted about the result.
    """
    hist: Counter = Counter()
    for a in enumerate_nilpotents(n):
        if disjoint_only and image_meets_domain(a):
            continue
        hist[is_nilpotent(a).witness_power] += 1
    return hist
