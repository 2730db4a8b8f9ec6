"""
Three independent ways to list the elements of a monoid family.

* ``enumerate_filter`` walks all (n+1)^n partial maps and keeps those that
  pass ``in_family``.  Slow, obviously correct, guarded at n <= 6.
* ``enumerate_constructive`` builds members directly from a domain
  interval, an image interval and a monotone surjection between them.
* ``froidure_pin`` closes a generating set under right multiplication,
  recording both Cayley graphs and shortlex normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .chain import (
    FAMILY_TAGS,
    PartialTransformation,
    _make,
    format_transformation,
    identity,
    in_family,
    zero,
)
from .exceptions import ResourceGuardError, SizeMismatchError

__all__ = [
    "FILTER_MAX_N",
    "CONSTRUCTIVE_TAGS",
    "enumerate_filter",
    "enumerate_constructive",
    "monotone_surjections",
    "MonoidTable",
    "froidure_pin",
    "closure_equals",
]

FILTER_MAX_N = 6
CONSTRUCTIVE_TAGS = ("PIO", "IO", "PIM", "IM", "PIM_r", "IM_r")


def enumerate_filter(n: int, tag: str, max_n: int = FILTER_MAX_N) -> frozenset[PartialTransformation]:
    """All members of the family among every partial map of the n-chain."""
    if tag not in FAMILY_TAGS:
        raise ValueError(f"unknown family tag {tag!r}")
    if n < 1:
        raise ValueError("chain size must be at least 1")
    if n > max_n:
        raise ResourceGuardError(
            f"filter enumeration visits (n+1)^n = {(n + 1) ** n} maps; refusing n = {n} > {max_n}"
        )
    out = set()
    for imgs in product(range(n + 1), repeat=n):
        a = _make(imgs)
        if in_family(a, tag):
            out.add(a)
    return frozenset(out)


def monotone_surjections(r: int, s: int) -> list[tuple[int, ...]]:
    """Order-preserving surjections of the r-chain onto the s-chain.

    Each is returned as a tuple of 0-based targets; they correspond to the
    C(r-1, s-1) ways of cutting r points into s consecutive non-empty runs.
    """
    if not 1 <= s <= r:
        return []
    out = []
    for cuts in combinations(range(1, r), s - 1):
        bounds = (0,) + cuts + (r,)
        out.append(tuple(k for k in range(s) for _ in range(bounds[k + 1] - bounds[k])))
    return out


def _iter_constructive(n: int, tag: str):
    partial = tag in ("PIO", "PIM", "PIM_r")
    preserving = tag in ("PIO", "IO", "PIM", "IM")
    reversing = tag in ("PIM", "IM", "PIM_r", "IM_r")
    if partial:
        yield zero(n)
        domains = [(j, r) for r in range(1, n + 1) for j in range(1, n - r + 2)]
    else:
        domains = [(1, n)]
    for j, r in domains:
        left = (0,) * (j - 1)
        right = (0,) * (n - j - r + 1)
        for s in range(1, r + 1):
            for pattern in monotone_surjections(r, s):
                flipped = tuple(s - 1 - k for k in pattern)
                for t in range(1, n - s + 2):
                    if preserving:
                        yield _make(left + tuple(t + k for k in pattern) + right)
                    # a constant map is both kinds; emit it once
                    if reversing and (s > 1 or not preserving):
                        yield _make(left + tuple(t + k for k in flipped) + right)


def enumerate_constructive(n: int, tag: str) -> frozenset[PartialTransformation]:
    """Members of an interval family built directly, without filtering."""
    if tag not in CONSTRUCTIVE_TAGS:
        raise ValueError(f"constructive enumeration supports {', '.join(CONSTRUCTIVE_TAGS)}; got {tag!r}")
    if n < 1:
        raise ValueError("chain size must be at least 1")
    return frozenset(_iter_constructive(n, tag))


_DOT_COLORS = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gray40")


@dataclass
class MonoidTable:
    """Result of a Froidure-Pin closure.

    ``elements[0]`` is always the identity and carries the empty word.
    Elements appear in shortlex order of their normal forms, so
    ``words[k]`` is the shortlex-least word (a tuple of generator indices)
    evaluating to ``elements[k]``.  ``right_cayley[k][g]`` is the index of
    ``elements[k] * generators[g]``; ``left_cayley[k][g]`` that of
    ``generators[g] * elements[k]``.
    """

    n: int
    generators: tuple[PartialTransformation, ...]
    labels: tuple[str, ...]
    elements: list[PartialTransformation]
    index: dict[PartialTransformation, int]
    right_cayley: list[list[int]]
    left_cayley: list[list[int]]
    words: list[tuple[int, ...]]
    prefix: list[int]
    last: list[int]
    identity_adjoined: bool
    _mult: np.ndarray | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return a in self.index

    def element_set(self) -> frozenset[PartialTransformation]:
        return frozenset(self.elements)

    def normal_form(self, a: PartialTransformation) -> tuple[int, ...]:
        return self.words[self.index[a]]

    def word_label(self, word: Sequence[int]) -> str:
        return " ".join(self.labels[g] for g in word) or "1"

    def evaluate(self, word: Iterable[int]) -> PartialTransformation:
        k = 0
        for g in word:
            k = self.right_cayley[k][g]
        return self.elements[k]

    def multiplication_table(self) -> np.ndarray:
        """Full table ``T[s, t] = index(elements[s] * elements[t])``.

        Column t is obtained from the column of its prefix by one lookup in
        the right Cayley graph, so no compositions are performed.
        """
        if self._mult is None:
            size = len(self.elements)
            right = np.asarray(self.right_cayley, dtype=np.int32).reshape(size, len(self.generators))
            table = np.empty((size, size), dtype=np.int32)
            table[:, 0] = np.arange(size, dtype=np.int32)
            for t in range(1, size):
                table[:, t] = right[table[:, self.prefix[t]], self.last[t]]
            self._mult = table
        return self._mult

    def to_dot(self) -> str:
        lines = ["digraph cayley {", "  node [shape=box];"]
        for k, w in enumerate(self.words):
            lines.append(f'  {k} [label="{self.word_label(w)}"];')
        for k, row in enumerate(self.right_cayley):
            for g, t in enumerate(row):
                color = _DOT_COLORS[g % len(_DOT_COLORS)]
                lines.append(f'  {k} -> {t} [label="{self.labels[g]}", color="{color}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        return "".join(format_transformation(a) + "\n" for a in self.elements)


def froidure_pin(
    generators: Sequence[PartialTransformation],
    n: int | None = None,
    labels: Sequence[str] | None = None,
) -> MonoidTable:
    """Enumerate the monoid generated by ``generators`` (identity adjoined)."""
    gens = tuple(generators)
    if n is None:
        if not gens:
            raise ValueError("n is required when there are no generators")
        n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise SizeMismatchError("all generators must act on the same chain")
    if labels is None:
        labels = [f"x{g}" for g in range(len(gens))]
    labels = tuple(labels)
    if len(labels) != len(gens):
        raise ValueError("one label per generator is required")

    ext = [(0,) + tuple(g) for g in gens]
    one = identity(n)
    elements = [one]
    index = {one: 0}
    words: list[tuple[int, ...]] = [()]
    prefix = [-1]
    last = [-1]
    right: list[list[int]] = []
    k = 0
    while k < len(elements):
        a = elements[k]
        row = []
        for g, eg in enumerate(ext):
            prod_ = tuple([eg[x] for x in a])
            t = index.get(prod_)
            if t is None:
                t = len(elements)
                p = _make(prod_)
                elements.append(p)
                index[p] = t
                words.append(words[k] + (g,))
                prefix.append(k)
                last.append(g)
            row.append(t)
        right.append(row)
        k += 1

    ngens = len(gens)
    left = [[0] * ngens for _ in elements]
    left[0] = [right[0][g] for g in range(ngens)]
    for t in range(1, len(elements)):
        p, x = prefix[t], last[t]
        left[t] = [right[left[p][g]][x] for g in range(ngens)]

    adjoined = not any(t == 0 for row in right for t in row)
    return MonoidTable(
        n=n,
        generators=gens,
        labels=labels,
        elements=elements,
        index=index,
        right_cayley=right,
        left_cayley=left,
        words=words,
        prefix=prefix,
        last=last,
        identity_adjoined=adjoined,
    )


def closure_equals(generators: Sequence[PartialTransformation], n: int, tag: str) -> bool:
    """True iff the generated monoid is exactly the named family."""
    return froidure_pin(generators, n).element_set() == enumerate_constructive(n, tag)
