"""
Monoid presentations over named letters.

Words are tuples of letter names such as ``("h", "a1")``; the empty
tuple is the identity.  Letters are assigned concrete transformations by
``standard_assignment`` (a_i, b_i, e_i, f_i, h on the n-chain), which lets
every relation be checked by evaluation.

Relation files are UTF-8 text, one relation per line::

    # comment
    h h = 1
    h a1 = b3 h

Letters are whitespace separated and ``1`` stands for the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .chain import PartialTransformation, compose, format_transformation, generator, identity, rank
from .enumeration import MonoidTable, froidure_pin
from .exceptions import RelationFileError, ResourceGuardError
from .formulas import card_IM, card_PIM

__all__ = [
    "Word",
    "Relation",
    "Presentation",
    "standard_alphabet",
    "standard_assignment",
    "evaluate_word",
    "relations_N",
    "Violation",
    "check_relations_hold",
    "applied_relation",
    "derive_chain_1",
    "check_chain",
    "ExtensionInput",
    "extend_presentation",
    "im_extension_input",
    "pim_extension_input",
    "BoundExceeded",
    "todd_coxeter",
    "fp_enumerate",
    "machine_presentation",
    "parse_relations",
    "format_relations",
    "load_relations",
    "SizeClaims",
    "theorem_size_claims",
    "presentation_size_claims",
    "expected_extension_size",
]

Word = tuple[str, ...]
Relation = tuple[Word, Word]


@dataclass
class Presentation:
    """Alphabet (in shortlex order) and defining relations."""

    alphabet: tuple[str, ...]
    relations: list[Relation] = field(default_factory=list)

    def __post_init__(self):
        self.alphabet = tuple(self.alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet has repeated letters")
        if "1" in self.alphabet:
            raise ValueError("'1' is reserved for the empty word")
        self.relations = [(tuple(u), tuple(v)) for u, v in self.relations]
        letters = set(self.alphabet)
        for u, v in self.relations:
            stray = (set(u) | set(v)) - letters
            if stray:
                raise ValueError(f"relation {_show(u)} = {_show(v)} uses letters {sorted(stray)} outside the alphabet")

    def shortlex_key(self, word: Sequence[str]) -> tuple:
        order = {x: k for k, x in enumerate(self.alphabet)}
        return (len(word), tuple(order[x] for x in word))


def _show(word: Sequence[str]) -> str:
    return " ".join(word) or "1"


def standard_alphabet(n: int, family: str = "IM", with_h: bool = True) -> tuple[str, ...]:
    """a_1 < ... < a_{n-1} < b_1 < ... [< e_1 < ... < f_2 < ... < f_n] < h."""
    if n < 2:
        raise ValueError("presentations are considered for n >= 2")
    if family not in ("IM", "PIM"):
        raise ValueError(f"unknown family {family!r}")
    letters = [f"a{i}" for i in range(1, n)] + [f"b{i}" for i in range(1, n)]
    if family == "PIM":
        letters += [f"e{i}" for i in range(1, n)] + [f"f{i}" for i in range(2, n + 1)]
    if with_h:
        letters.append("h")
    return tuple(letters)


def standard_assignment(n: int, family: str = "PIM") -> dict[str, PartialTransformation]:
    """Letter name to transformation for every letter of ``standard_alphabet``."""
    out = {}
    for name in standard_alphabet(n, family):
        if name == "h":
            out[name] = generator("h", n=n)
        else:
            out[name] = generator(name[0], int(name[1:]), n)
    return out


def evaluate_word(word: Sequence[str], assignment: Mapping[str, PartialTransformation], n: int) -> PartialTransformation:
    result = identity(n)
    for x in word:
        result = compose(result, assignment[x])
    return result


def relations_N(n: int) -> dict[str, list[Relation]]:
    """The relations added when h is adjoined: keys "N0", "N1", "N1'", "N2".

    N0: h h = 1; N1: h a_i = b_{n-i} h; N1': h e_i = f_{n-i+1} h;
    N2: a_1^{n-1} h = b_{n-1}^{n-1}.
    """
    if n < 2:
        raise ValueError("the relations are stated for n >= 2")
    return {
        "N0": [(("h", "h"), ())],
        "N1": [(("h", f"a{i}"), (f"b{n - i}", "h")) for i in range(1, n)],
        "N1'": [(("h", f"e{i}"), (f"f{n - i + 1}", "h")) for i in range(1, n)],
        "N2": [(("a1",) * (n - 1) + ("h",), (f"b{n - 1}",) * (n - 1))],
    }


@dataclass(frozen=True)
class Violation:
    relation: Relation
    left_value: PartialTransformation
    right_value: PartialTransformation

    def __str__(self):
        u, v = self.relation
        return (
            f"{_show(u)} = {_show(v)} fails: {format_transformation(self.left_value)}"
            f" != {format_transformation(self.right_value)}"
        )


def check_relations_hold(
    relations: Presentation | Iterable[Relation],
    assignment: Mapping[str, PartialTransformation],
    n: int,
) -> list[Violation]:
    """Relations whose two sides evaluate to different transformations."""
    rels = relations.relations if isinstance(relations, Presentation) else relations
    out = []
    for u, v in rels:
        lu, lv = evaluate_word(u, assignment, n), evaluate_word(v, assignment, n)
        if lu != lv:
            out.append(Violation((tuple(u), tuple(v)), lu, lv))
    return out


def applied_relation(u: Word, v: Word, relations: Iterable[Relation]) -> tuple[Relation, int] | None:
    """The relation (in either direction) and position turning u into v by one
    subword replacement, or None."""
    for rel in relations:
        for lhs, rhs in (rel, rel[::-1]):
            for p in range(len(u) - len(lhs) + 1):
                if u[p : p + len(lhs)] == lhs and u[:p] + rhs + u[p + len(lhs) :] == v:
                    return rel, p
    return None


def derive_chain_1(n: int, i: int, kind: str = "b") -> list[Word]:
    """Rewriting chain h b_i -> h b_i h h -> h h a_{n-i} h -> a_{n-i} h.

    With ``kind="f"`` the chain runs from h f_i to e_{n-i+1} h instead.
    Each step applies one relation of N0 together with N1 (or N1').
    """
    if kind == "b":
        if not 1 <= i <= n - 1:
            raise IndexError(f"need 1 <= i <= {n - 1}")
        x, y = f"b{i}", f"a{n - i}"
    elif kind == "f":
        if not 2 <= i <= n:
            raise IndexError(f"need 2 <= i <= {n}")
        x, y = f"f{i}", f"e{n - i + 1}"
    else:
        raise ValueError("kind must be 'b' or 'f'")
    return [("h", x), ("h", x, "h", "h"), ("h", "h", y, "h"), (y, "h")]


def check_chain(chain: Sequence[Word], relations: Iterable[Relation]) -> list[Relation]:
    """Relations applied at each step; raises ValueError at the first step
    that is not a single relation application."""
    rels = list(relations)
    used = []
    for u, v in zip(chain, chain[1:]):
        hit = applied_relation(tuple(u), tuple(v), rels)
        if hit is None:
            raise ValueError(f"{_show(u)} -> {_show(v)} is not a single relation step")
        used.append(hit[0])
    return used


@dataclass
class ExtensionInput:
    """Data for adjoining an involution y to a presented monoid.

    ``canonical_u`` and ``canonical_v`` split a set of canonical forms W of
    the base presentation; every word of U contains ``u0`` as a factor and
    W contains the empty word.  ``conjugation`` maps base letters x to the
    words v with y x = v y (letters left out must be handled by derived
    relations); ``v0`` is the word with u0 y = v0.
    """

    base: Presentation
    canonical_u: list[Word]
    canonical_v: list[Word]
    u0: Word
    y: str
    conjugation: dict[str, Word]
    v0: Word

    def validate(self):
        if self.y in self.base.alphabet:
            raise ValueError(f"letter {self.y!r} is already in the base alphabet")
        if () not in self.canonical_u and () not in self.canonical_v:
            raise ValueError("the canonical forms must contain the empty word")
        k = len(self.u0)
        for w in self.canonical_u:
            if not any(tuple(w[p : p + k]) == tuple(self.u0) for p in range(len(w) - k + 1)):
                raise ValueError(f"{_show(w)} does not contain {_show(self.u0)} as a factor")
        for x in self.conjugation:
            if x not in self.base.alphabet:
                raise ValueError(f"conjugation given for unknown letter {x!r}")


def extend_presentation(inp: ExtensionInput) -> tuple[Presentation, list[Word]]:
    """Presentation over X + {y} and the canonical forms U, V, {w y : w in V}.

    The relations are the base ones, y y = 1, y x = v y for every letter in
    ``conjugation``, and u0 y = v0.  ``len(forms) == |U| + 2|V|``.
    """
    inp.validate()
    y = inp.y
    rels = list(inp.base.relations)
    rels.append(((y, y), ()))
    for x in inp.base.alphabet:
        if x in inp.conjugation:
            rels.append(((y, x), tuple(inp.conjugation[x]) + (y,)))
    rels.append((tuple(inp.u0) + (y,), tuple(inp.v0)))
    forms = [tuple(w) for w in inp.canonical_u] + [tuple(w) for w in inp.canonical_v]
    forms += [tuple(w) + (y,) for w in inp.canonical_v]
    return Presentation(inp.base.alphabet + (y,), rels), forms


def _base_table(n, family):
    assignment = standard_assignment(n, family)
    letters = standard_alphabet(n, family, with_h=False)
    return froidure_pin([assignment[x] for x in letters], n, letters)


def _letter_word(table: MonoidTable, k: int) -> Word:
    return tuple(table.labels[g] for g in table.words[k])


def im_extension_input(n: int, base: Presentation | None = None) -> ExtensionInput:
    """Extension data adjoining h to IO_n on the letters a_i, b_i.

    W is the set of shortlex normal forms of IO_n; ``base`` defaults to the
    machine presentation read off the same Cayley graph.
    """
    table = _base_table(n, "IM")
    if base is None:
        base = machine_presentation(table)
    u0 = ("a1",) * (n - 1)
    canonical_v, canonical_u = [], []
    for k, a in enumerate(table.elements):
        w = _letter_word(table, k)
        if rank(a) >= 2:
            canonical_v.append(w)
        else:
            canonical_u.append(u0 + w)
    conj = {f"a{i}": (f"b{n - i}",) for i in range(1, n)}
    return ExtensionInput(base, canonical_u, canonical_v, u0, "h", conj, (f"b{n - 1}",) * (n - 1))


def pim_extension_input(n: int, base: Presentation | None = None) -> ExtensionInput:
    """Extension data adjoining h to PIO_n on the letters a_i, b_i, e_i, f_i.

    Words of image size at most 1 are replaced by w_{i,j,1} u0 w_{1,0,k}
    (constant k on [i, i+j]) and u0 w_0 (the empty map).
    """
    table = _base_table(n, "PIM")
    if base is None:
        base = machine_presentation(table)
    u0 = ("a1",) * (n - 1)

    def nf(images):
        return _letter_word(table, table.index[PartialTransformation(images)])

    def const(i, j, k):
        return nf([k if i <= x <= i + j else 0 for x in range(1, n + 1)])

    canonical_v = [_letter_word(table, k) for k, a in enumerate(table.elements) if rank(a) >= 2]
    canonical_u = [
        const(i, j, 1) + u0 + const(1, 0, k)
        for i in range(1, n + 1)
        for j in range(0, n - i + 1)
        for k in range(1, n + 1)
    ]
    canonical_u.append(u0 + nf([0] * n))
    conj = {f"a{i}": (f"b{n - i}",) for i in range(1, n)}
    conj.update({f"e{i}": (f"f{n - i + 1}",) for i in range(1, n)})
    return ExtensionInput(base, canonical_u, canonical_v, u0, "h", conj, (f"b{n - 1}",) * (n - 1))


@dataclass(frozen=True)
class BoundExceeded:
    """Returned by ``fp_enumerate`` when no size can be reported."""

    bound: int
    reason: str


class _Overflow(Exception):
    pass


def todd_coxeter(presentation: Presentation, max_nodes: int = 200_000) -> list[list[int]]:
    """Right Cayley graph of the monoid defined by a presentation.

    Coset enumeration (HLT strategy) for the trivial right congruence: the
    relations are traced from every node, so the result is the right
    regular action of the quotient.  Node 0 is the identity and
    ``graph[p][x]`` is the node reached from p by letter number x.  Raises
    ResourceGuardError when more than ``max_nodes`` nodes are defined.
    """
    letters = {x: k for k, x in enumerate(presentation.alphabet)}
    nletters = len(letters)
    rels = [(tuple(letters[x] for x in u), tuple(letters[x] for x in v)) for u, v in presentation.relations]
    table: list[list[int]] = [[-1] * nletters]
    parent = [0]

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def new_node():
        if len(table) >= max_nodes:
            raise _Overflow
        table.append([-1] * nletters)
        parent.append(len(parent))
        return len(table) - 1

    def trace(c, word):
        for x in word:
            c = find(c)
            t = table[c][x]
            if t < 0:
                t = table[c][x] = new_node()
            c = t
        return find(c)

    def coincide(p, q):
        queue = [(p, q)]
        while queue:
            p, q = queue.pop()
            p, q = find(p), find(q)
            if p == q:
                continue
            if q < p:
                p, q = q, p
            parent[q] = p
            rowp, rowq = table[p], table[q]
            for x in range(nletters):
                tq = rowq[x]
                if tq >= 0:
                    if rowp[x] < 0:
                        rowp[x] = tq
                    else:
                        queue.append((rowp[x], tq))

    try:
        c = 0
        while c < len(table):
            if find(c) == c:
                for u, v in rels:
                    p, q = trace(c, u), trace(c, v)
                    if p != q:
                        coincide(p, q)
                    if find(c) != c:
                        break
                else:
                    row = table[c]
                    for x in range(nletters):
                        if row[x] < 0:
                            row[x] = new_node()
            c += 1
    except _Overflow:
        raise ResourceGuardError(f"coset enumeration defined more than {max_nodes} nodes") from None

    live = [p for p in range(len(table)) if find(p) == p]
    renum = {p: k for k, p in enumerate(live)}
    graph = [[renum[find(table[p][x])] for x in range(nletters)] for p in live]

    def walk(k, word):
        for x in word:
            k = graph[k][x]
        return k

    for k in range(len(graph)):
        for u, v in rels:
            if walk(k, u) != walk(k, v):
                raise RuntimeError("coset enumeration finished with an inconsistent table")
    return graph


def fp_enumerate(presentation: Presentation, size_bound: int, max_nodes: int | None = None) -> int | BoundExceeded:
    """Size of the monoid defined by the presentation, if at most ``size_bound``.

    A returned integer is always exact.  ``BoundExceeded`` means either the
    monoid is larger than the bound or the enumeration hit its work limit
    (``max_nodes``, default ``max(200_000, 1000 * size_bound)``); the
    ``reason`` field says which.
    """
    if size_bound < 1:
        raise ValueError("size_bound must be at least 1")
    if max_nodes is None:
        max_nodes = max(200_000, 1000 * size_bound)
    try:
        graph = todd_coxeter(presentation, max_nodes)
    except ResourceGuardError as exc:
        return BoundExceeded(size_bound, str(exc))
    if len(graph) > size_bound:
        return BoundExceeded(size_bound, f"the monoid has {len(graph)} elements")
    return len(graph)


def machine_presentation(table: MonoidTable, minimal: bool = True) -> Presentation:
    """Defining relations read off a Froidure-Pin table.

    For each element s and generator x whose word nf(s) x is not a normal
    form, the relation nf(s) x = nf(s x) is recorded.  With ``minimal``
    only words whose suffix after the first letter is a normal form are
    kept; these already form a complete rewriting system.
    """
    labels = table.labels
    normal = {w for w in table.words}
    rels = []
    for k, row in enumerate(table.right_cayley):
        wk = table.words[k]
        for g, t in enumerate(row):
            w = wk + (g,)
            if w == table.words[t]:
                continue
            if minimal and w[1:] not in normal:
                continue
            rels.append((tuple(labels[x] for x in w), tuple(labels[x] for x in table.words[t])))
    return Presentation(labels, rels)


def parse_relations(text: str) -> list[Relation]:
    rels = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("=")
        if len(parts) != 2:
            raise RelationFileError(f"line {lineno}: expected 'u = v', got {line!r}")
        words = []
        for side in parts:
            tokens = side.split()
            if not tokens:
                raise RelationFileError(f"line {lineno}: empty side (write 1 for the empty word)")
            if tokens == ["1"]:
                words.append(())
            elif "1" in tokens:
                raise RelationFileError(f"line {lineno}: '1' must stand alone")
            else:
                words.append(tuple(tokens))
        rels.append((words[0], words[1]))
    return rels


def format_relations(relations: Iterable[Relation]) -> str:
    return "".join(f"{_show(u)} = {_show(v)}\n" for u, v in relations)


def load_relations(path: str | Path) -> list[Relation]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise RelationFileError(f"{path}: not UTF-8 ({exc})") from None
    return parse_relations(text)


@dataclass
class SizeClaims:
    """Generator and relation counts of the extended presentations.

    ``implied_base_relations`` is what the base presentation on the enlarged
    alphabet must contribute for the totals to add up; for IM it exceeds
    the cited (n-1)-generator count by ``base_relation_excess``.
    """

    n: int
    family: str
    claimed_generators: int
    claimed_relations: int
    base_generators: int
    cited_base_generators: int
    cited_base_relations: int
    added_relations: int
    implied_base_relations: int
    base_relation_excess: int
    expected_excess: int

    @property
    def consistent(self) -> bool:
        return (
            self.base_generators + 1 == self.claimed_generators
            and self.cited_base_relations + self.base_relation_excess + self.added_relations
            == self.claimed_relations
            and self.base_relation_excess == self.expected_excess
        )


def theorem_size_claims(n: int) -> dict[str, SizeClaims]:
    """Bookkeeping of the IM and PIM presentation sizes for a given n >= 2."""
    if n < 2:
        raise ValueError("presentation sizes are stated for n >= 2")
    nrel = relations_N(n)
    im_added = len(nrel["N0"]) + len(nrel["N1"]) + len(nrel["N2"])
    pim_added = im_added + len(nrel["N1'"])

    im_claim = (3 * n * n + n) // 2
    im_cited = (3 * n * n - 7 * n + 4) // 2
    im_implied = im_claim - im_added
    pim_claim = 5 * n * n + 5 * n - 10
    pim_cited = 5 * n * n + 3 * n - 10
    pim_implied = pim_claim - pim_added
    return {
        "IM": SizeClaims(
            n, "IM", 2 * n - 1, im_claim,
            base_generators=len(standard_alphabet(n, "IM", with_h=False)),
            cited_base_generators=n - 1,
            cited_base_relations=im_cited,
            added_relations=im_added,
            implied_base_relations=im_implied,
            base_relation_excess=im_implied - im_cited,
            expected_excess=3 * (n - 1),
        ),
        "PIM": SizeClaims(
            n, "PIM", 4 * n - 3, pim_claim,
            base_generators=len(standard_alphabet(n, "PIM", with_h=False)),
            cited_base_generators=4 * n - 4,
            cited_base_relations=pim_cited,
            added_relations=pim_added,
            implied_base_relations=pim_implied,
            base_relation_excess=pim_implied - pim_cited,
            expected_excess=0,
        ),
    }


presentation_size_claims = theorem_size_claims


def expected_extension_size(n: int, family: str) -> int:
    return card_IM(n) if family == "IM" else card_PIM(n)
