from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from intervalmono.chain import PartialTransformation, identity, parse, zero
from intervalmono.nilpotents import (
    enumerate_nilpotents,
    is_nilpotent,
    nilpotents_by_domain,
    nonclosure_witness,
    split_by_orientation,
    witness_power_histogram,
)


def _acyclic(a):
    """Independent test: a partial map is nilpotent iff following it from
    any point always runs off its domain."""
    n = len(a)
    for start in range(1, n + 1):
        x, steps = start, 0
        while x and steps <= n:
            x, steps = a[x - 1], steps + 1
        if x:
            return False
    return True


@st.composite
def partial_maps(draw):
    n = draw(st.integers(1, 7))
    return PartialTransformation(draw(st.lists(st.integers(0, n), min_size=n, max_size=n)))


@given(partial_maps())
def test_power_iteration_matches_cycle_test(a):
    verdict = is_nilpotent(a)
    assert bool(verdict) == _acyclic(a)
    if verdict:
        assert 1 <= verdict.witness_power <= len(a) + 1
        assert a**verdict.witness_power == zero(len(a))


def test_verdicts():
    assert not is_nilpotent(identity(3))
    assert is_nilpotent(identity(3)).cycle_detected_at == 2
    v = is_nilpotent(parse("[1 2 3 / - 1 2]"))
    assert v.nilpotent and v.witness_power == 3
    with pytest.raises(ValueError):
        is_nilpotent(identity(3), n=4)


def test_full_families_have_no_zero():
    for family in ("IM", "IO", "IM_r"):
        with pytest.raises(ValueError, match="no zero"):
            enumerate_nilpotents(3, family)


def test_small_witness():
    assert nonclosure_witness(1) is None
    assert nonclosure_witness(2) == (parse("[1 2 / - 1]"), parse("[1 2 / 2 -]"))


def test_by_domain_keys():
    counts = nilpotents_by_domain(4)
    assert set(counts) == {(j, r) for r in range(1, 4) for j in range(1, 6 - r)}


@pytest.mark.parametrize("n", range(1, 7))
def test_orientation_split(n):
    split = split_by_orientation(n)
    assert split["order_preserving"] + split["reversing_only"] == split["total"]


@pytest.mark.parametrize("n", range(1, 7))
def test_witness_histogram_totals(n):
    hist = witness_power_histogram(n)
    assert sum(hist.values()) == len(enumerate_nilpotents(n))
    assert max(hist) <= n
    assert isinstance(witness_power_histogram(n, disjoint_only=True), Counter)
