import json

import pytest

from intervalmono.chain import generator, rank
from intervalmono.enumeration import enumerate_constructive
from intervalmono.exceptions import ResourceGuardError
from intervalmono.rank import (
    certify_rank_exhaustive,
    certify_rank_structural,
    generating_set,
    im_generating_set,
    pim_generating_set,
    rank_formula,
    top_layer,
    verify_factorizations,
)


def test_generating_set_shapes():
    gens, labels = im_generating_set(6)
    assert labels == ["c1", "c2", "c3", "h"]
    assert gens[-1] == generator("h", n=6)
    gens, labels = pim_generating_set(6)
    assert labels == ["c1", "c2", "c3", "e5", "h"]
    with pytest.raises(ValueError):
        im_generating_set(2)
    with pytest.raises(ValueError):
        generating_set(4, "IO")


@pytest.mark.parametrize("n", range(1, 13))
def test_rank_formula(n):
    assert rank_formula(n, "IM") == len(generating_set(n, "IM")[0])
    assert rank_formula(n, "PIM") == len(generating_set(n, "PIM")[0])


def test_factorizations_small():
    assert verify_factorizations(3)
    with pytest.raises(ValueError):
        verify_factorizations(2)


def test_search_cap():
    with pytest.raises(ResourceGuardError):
        certify_rank_exhaustive(5, "PIM", cap=10)


def test_exhaustive_certificate_contents():
    cert = certify_rank_exhaustive(4, "IM")
    assert cert.valid and cert.claimed_rank == 3
    assert cert.exhausted_size == 2
    assert cert.search_space > 0 and cert.subsets_checked <= cert.search_space
    doc = json.loads(cert.to_json())
    assert doc["upper_bound_set"] == ["[1 2 3 4 / 3 2 1 1]", "[1 2 3 4 / 3 2 2 1]", "[1 2 3 4 / 4 3 2 1]"]
    assert doc["lower_bound_method"] == cert.lower_bound_method


def test_rank_zero_case():
    cert = certify_rank_exhaustive(1, "IM")
    assert cert.valid and cert.claimed_rank == 0
    assert cert.upper_bound_set == []


def test_structural_needs_n_at_least_3():
    with pytest.raises(ValueError):
        certify_rank_structural(2, "IM")


def test_structural_records_every_clause():
    cert = certify_rank_structural(8, "IM")
    assert cert.valid and cert.claimed_rank == 5
    assert sum(k.startswith("(") for k in cert.clauses) == 5


@pytest.mark.parametrize("n", range(2, 7))
def test_top_layer(n):
    members = enumerate_constructive(n, "IM")
    assert top_layer(n, members, n) == {generator("h", n=n), generator("id", n=n)}
    layer = top_layer(n, members, n - 1)
    assert all(rank(a) == n - 1 for a in layer)
    # a_i, h a_i, a_i h, h a_i h are distinct once n > 2
    assert len(layer) == (4 * (n - 1) if n > 2 else 2)
