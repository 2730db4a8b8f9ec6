"""
Partial transformations of the finite chain 1 < 2 < ... < n.

A transformation is stored densely as a tuple of length n whose entry at
position x-1 is the image of x, or 0 when x is outside the domain.  With
that encoding plain tuple comparison gives the canonical total order
(undefined < 1 < ... < n, lexicographic), so transformations can be used
directly as dict keys and sorted deterministically.

Composition is left to right: x(ab) = (xa)b.

    >>> a = parse("[1 2 3 / 1 1 2]")
    >>> h = generator("h", n=3)
    >>> format_transformation(a * h)
    '[1 2 3 / 3 3 2]'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import EmptyKernelError, SizeMismatchError

__all__ = [
    "PartialTransformation",
    "Partition",
    "FAMILY_TAGS",
    "compose",
    "identity",
    "zero",
    "domain",
    "image",
    "rank",
    "is_full",
    "is_interval",
    "is_order_preserving",
    "is_order_reversing",
    "is_monotone",
    "in_family",
    "generator",
    "kernel",
    "pi_partition",
    "parse",
    "format_transformation",
]

FAMILY_TAGS = ("PT", "T", "PO", "O", "PM", "M", "PIO", "IO", "PIM", "IM", "PIM_r", "IM_r")


class PartialTransformation(tuple):
    """Immutable partial self-map of {1..n}; entry 0 means undefined.

    Build one from a sequence of images where ``None`` or ``0`` marks an
    undefined point.  ``a * b`` is the left-to-right product.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int | None]):
        imgs = tuple(0 if x is None else int(x) for x in images)
        n = len(imgs)
        if n < 1:
            raise ValueError("chain size must be at least 1")
        for x in imgs:
            if not 0 <= x <= n:
                raise ValueError(f"image {x} outside the chain 1..{n}")
        return tuple.__new__(cls, imgs)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int | None:
        """Image of the point x, or None if x is not in the domain."""
        if not 1 <= x <= len(self):
            raise ValueError(f"point {x} outside the chain 1..{len(self)}")
        y = tuple.__getitem__(self, x - 1)
        return y or None

    def __mul__(self, other):
        if isinstance(other, PartialTransformation):
            return compose(self, other)
        return NotImplemented

    def __rmul__(self, other):
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = identity(self.n)
        for _ in range(k):
            result = compose(result, self)
        return result

    def __repr__(self):
        return f"PartialTransformation({format_transformation(self)!r})"


def _make(images) -> PartialTransformation:
    # trusted constructor for internal hot loops
    return tuple.__new__(PartialTransformation, images)


def compose(a: PartialTransformation, b: PartialTransformation) -> PartialTransformation:
    """Return the product ab, where x(ab) = (xa)b."""
    if len(a) != len(b):
        raise SizeMismatchError(f"cannot compose maps on chains of size {len(a)} and {len(b)}")
    ext = (0,) + tuple(b)
    return _make([ext[x] for x in a])


def identity(n: int) -> PartialTransformation:
    return _make(range(1, n + 1))


def zero(n: int) -> PartialTransformation:
    """The empty transformation 0_n."""
    if n < 1:
        raise ValueError("chain size must be at least 1")
    return _make((0,) * n)


def domain(a: PartialTransformation) -> frozenset[int]:
    return frozenset(x for x, y in enumerate(a, 1) if y)


def image(a: PartialTransformation) -> frozenset[int]:
    return frozenset(y for y in a if y)


def rank(a: PartialTransformation) -> int:
    """Size of the image."""
    return len(image(a))


def is_full(a: PartialTransformation) -> bool:
    return 0 not in a


def is_interval(points: Iterable[int], n: int | None = None) -> bool:
    """True iff the points form a gap-free run; the empty set counts."""
    s = set(points)
    if n is not None and any(not 1 <= x <= n for x in s):
        raise ValueError(f"points must lie in 1..{n}")
    if not s:
        return True
    return max(s) - min(s) + 1 == len(s)


def _defined_images(a):
    return [y for y in a if y]


def is_order_preserving(a: PartialTransformation) -> bool:
    ys = _defined_images(a)
    return all(u <= v for u, v in zip(ys, ys[1:]))


def is_order_reversing(a: PartialTransformation) -> bool:
    ys = _defined_images(a)
    return all(u >= v for u, v in zip(ys, ys[1:]))


def is_monotone(a: PartialTransformation) -> bool:
    return is_order_preserving(a) or is_order_reversing(a)


def in_family(a: PartialTransformation, tag: str) -> bool:
    """Membership of a in the monoid named by tag (see FAMILY_TAGS)."""
    if tag not in FAMILY_TAGS:
        raise ValueError(f"unknown family tag {tag!r}; expected one of {', '.join(FAMILY_TAGS)}")
    if tag in ("T", "O", "M", "IO", "IM", "IM_r") and not is_full(a):
        return False
    if tag in ("PT", "T"):
        return True
    if tag in ("PO", "O", "PIO", "IO"):
        order_ok = is_order_preserving(a)
    elif tag in ("PIM_r", "IM_r"):
        order_ok = is_order_reversing(a)
    else:
        order_ok = is_monotone(a)
    if tag in ("PO", "O", "PM", "M"):
        return order_ok
    return order_ok and is_interval(domain(a)) and is_interval(image(a))


_INDEX_RANGES = {
    "a": lambda n: (1, n - 1),
    "b": lambda n: (1, n - 1),
    "c": lambda n: (1, n // 2),
    "e": lambda n: (1, n - 1),
    "f": lambda n: (2, n),
}


def generator(kind: str, i: int | None = None, n: int | None = None) -> PartialTransformation:
    """Named elements used throughout: a_i, b_i, c_i, e_i, f_i, h, id, zero.

    ``generator("c", 1, 4)`` is c_1 on a 4-chain; ``h``, ``id`` and ``zero``
    take no index (``generator("h", n=5)``).
    """
    if n is None:
        raise TypeError("chain size n is required")
    if n < 1:
        raise ValueError("chain size must be at least 1")
    if kind == "h":
        return _make(range(n, 0, -1))
    if kind == "id":
        return identity(n)
    if kind == "zero":
        return zero(n)
    if kind not in _INDEX_RANGES:
        raise ValueError(f"unknown generator kind {kind!r}")
    lo, hi = _INDEX_RANGES[kind](n)
    if i is None or not lo <= i <= hi:
        raise IndexError(f"{kind}_{i} is defined only for {lo} <= i <= {hi} when n = {n}")
    pts = range(1, n + 1)
    if kind == "a":
        imgs = [x if x <= i else x - 1 for x in pts]
    elif kind == "b":
        imgs = [x + 1 if x <= i else x for x in pts]
    elif kind == "c":
        imgs = [n - x if x <= n - i else n - x + 1 for x in pts]
    elif kind == "e":
        imgs = [x if x <= i else 0 for x in pts]
    else:
        imgs = [x if x >= i else 0 for x in pts]
    return _make(imgs)


@dataclass(frozen=True, order=True)
class Partition:
    """A set partition stored as sorted blocks (each a sorted tuple)."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        bs = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in bs):
            raise ValueError("blocks must be non-empty")
        seen = [x for b in bs for x in b]
        if len(seen) != len(set(seen)):
            raise ValueError("blocks must be pairwise disjoint")
        return cls(tuple(sorted(bs)))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for b in self.blocks for x in b)

    def refines(self, other: "Partition") -> bool:
        """Containment of equivalences: every block lies inside a block of other."""
        if self.support != other.support:
            return False
        where = {x: k for k, b in enumerate(other.blocks) for x in b}
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def kernel(a: PartialTransformation) -> Partition:
    """Partition of Dom(a) into the fibres of a."""
    fibres: dict[int, list[int]] = {}
    for x, y in enumerate(a, 1):
        if y:
            fibres.setdefault(y, []).append(x)
    if not fibres:
        raise EmptyKernelError("the empty transformation has no kernel")
    return Partition.from_blocks(fibres.values())


def pi_partition(i: int, n: int) -> Partition:
    """The partition of {1..n} whose only non-singleton block is {i, i+1}."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"pi_{i} needs 1 <= i <= {n - 1}")
    blocks = [(x,) for x in range(1, n + 1) if x not in (i, i + 1)]
    blocks.append((i, i + 1))
    return Partition.from_blocks(blocks)


_TWO_ROW = re.compile(r"^\s*\[(?P<top>[^/\]]*)/(?P<bottom>[^\]]*)\]\s*$")


def parse(text: str, n: int | None = None) -> PartialTransformation:
    """Read two-row notation such as ``[1 2 3 / 1 - 2]``.

    The top row lists the points of the chain and the bottom row their
    images, ``-`` marking an undefined point.  Points absent from the top
    row are undefined; n defaults to the largest point mentioned.
    """
    m = _TWO_ROW.match(text)
    if not m:
        raise ValueError(f"not in two-row notation: {text!r}")
    top = m["top"].split()
    bottom = m["bottom"].split()
    if len(top) != len(bottom):
        raise ValueError(f"rows differ in length: {text!r}")
    try:
        pts = [int(x) for x in top]
        imgs = [0 if y == "-" else int(y) for y in bottom]
    except ValueError:
        raise ValueError(f"bad entry in {text!r}") from None
    if len(set(pts)) != len(pts):
        raise ValueError(f"repeated point in top row: {text!r}")
    size = n if n is not None else max(pts + imgs + [0])
    if size < 1:
        raise ValueError(f"cannot infer chain size from {text!r}")
    images = [0] * size
    for x, y in zip(pts, imgs):
        if not 1 <= x <= size:
            raise ValueError(f"point {x} outside 1..{size}")
        images[x - 1] = y
    return PartialTransformation(images)


def format_transformation(a: Sequence[int]) -> str:
    """Two-row notation with every point of the chain in the top row."""
    top = " ".join(str(x) for x in range(1, len(a) + 1))
    bottom = " ".join(str(y) if y else "-" for y in a)
    return f"[{top} / {bottom}]"
