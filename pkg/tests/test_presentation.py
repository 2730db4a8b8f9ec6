import pytest
from hypothesis import given
from hypothesis import strategies as st

from intervalmono.enumeration import froidure_pin
from intervalmono.exceptions import RelationFileError, ResourceGuardError
from intervalmono.presentation import (
    BoundExceeded,
    ExtensionInput,
    Presentation,
    applied_relation,
    check_chain,
    check_relations_hold,
    derive_chain_1,
    fp_enumerate,
    format_relations,
    load_relations,
    machine_presentation,
    parse_relations,
    relations_N,
    standard_alphabet,
    standard_assignment,
    theorem_size_claims,
    todd_coxeter,
)
from intervalmono.rank import generating_set

letters = st.sampled_from(["a1", "a2", "b1", "h"])
words = st.lists(letters, max_size=5).map(tuple)


@given(st.lists(st.tuples(words, words), max_size=6))
def test_relation_text_round_trip(rels):
    assert parse_relations(format_relations(rels)) == rels


def test_relation_file_errors(tmp_path):
    with pytest.raises(RelationFileError):
        parse_relations("a1 a1")
    with pytest.raises(RelationFileError):
        parse_relations("a1 = ")
    with pytest.raises(RelationFileError):
        parse_relations("a1 1 = b1")
    assert parse_relations("# comment\n\nh h = 1\n") == [(("h", "h"), ())]
    path = tmp_path / "bad.rel"
    path.write_bytes(b"\xff\xfe = 1\n")
    with pytest.raises(RelationFileError):
        load_relations(path)


def test_presentation_rejects_foreign_letters():
    with pytest.raises(ValueError):
        Presentation(("a",), [(("a", "b"), ())])


@pytest.mark.parametrize(
    "alphabet,rels,size",
    [
        (("h",), [(("h", "h"), ())], 2),
        (("a",), [(("a",) * 3, ("a",) * 2)], 3),
        (("a",), [(("a",) * 5, ())], 5),
        (("a", "b"), [(("a", "a"), ()), (("b", "b"), ()), (("a", "b"), ("b", "a"))], 4),
        ((), [], 1),
    ],
)
def test_fp_enumerate_small(alphabet, rels, size):
    assert fp_enumerate(Presentation(alphabet, rels), 1000) == size


def test_fp_enumerate_bounds():
    # the free monoid on one letter and the bicyclic monoid are infinite
    assert isinstance(fp_enumerate(Presentation(("a",), []), 50), BoundExceeded)
    bicyclic = Presentation(("a", "b"), [(("a", "b"), ())])
    assert isinstance(fp_enumerate(bicyclic, 50), BoundExceeded)
    # a finite monoid larger than the bound
    assert isinstance(fp_enumerate(Presentation(("a",), [(("a",) * 20, ())]), 10), BoundExceeded)
    with pytest.raises(ResourceGuardError):
        todd_coxeter(Presentation(("a",), []), max_nodes=100)


@pytest.mark.parametrize("minimal", [True, False])
def test_machine_presentation_recovers_size(minimal):
    gens, labels = generating_set(3, "PIM")
    table = froidure_pin(gens, 3, labels)
    pres = machine_presentation(table, minimal=minimal)
    assert check_relations_hold(pres, dict(zip(labels, gens)), 3) == []
    assert fp_enumerate(pres, 1000) == 37


def test_violations_are_reported():
    bad = [(("a1",), ("b1",))]
    found = check_relations_hold(bad, standard_assignment(3, "IM"), 3)
    assert len(found) == 1
    assert "fails" in str(found[0])


def test_alphabet_order():
    assert standard_alphabet(3, "PIM") == ("a1", "a2", "b1", "b2", "e1", "e2", "f2", "f3", "h")
    assert standard_alphabet(3, "IM", with_h=False) == ("a1", "a2", "b1", "b2")


def test_relation_group_sizes():
    groups = relations_N(5)
    assert [len(groups[k]) for k in ("N0", "N1", "N1'", "N2")] == [1, 4, 4, 1]


def test_chains():
    rels = relations_N(4)
    chain = derive_chain_1(4, 1)
    assert chain[0] == ("h", "b1") and chain[-1] == ("a3", "h")
    assert check_chain(chain, rels["N0"] + rels["N1"])[1] == (("h", "a3"), ("b1", "h"))
    with pytest.raises(ValueError):
        check_chain([("h",), ("a1",)], rels["N0"])
    with pytest.raises(IndexError):
        derive_chain_1(4, 4)
    with pytest.raises(IndexError):
        derive_chain_1(4, 1, kind="f")
    assert applied_relation(("x", "h", "h"), ("x",), rels["N0"]) == ((("h", "h"), ()), 1)


def test_extension_input_validation():
    base = Presentation(("a",), [])
    with pytest.raises(ValueError):
        ExtensionInput(base, [], [()], ("a",), "a", {}, ()).validate()
    with pytest.raises(ValueError):
        ExtensionInput(base, [("b",)], [()], ("a",), "y", {}, ()).validate()
    with pytest.raises(ValueError):
        ExtensionInput(base, [], [("a",)], ("a",), "y", {}, ()).validate()


@pytest.mark.parametrize("n", [2, 3, 10, 57])
def test_size_claims(n):
    claims = theorem_size_claims(n)
    assert claims["IM"].base_relation_excess == 3 * (n - 1)
    assert claims["PIM"].base_relation_excess == 0
    assert claims["PIM"].claimed_generators == 4 * n - 3
    with pytest.raises(ValueError):
        theorem_size_claims(1)
