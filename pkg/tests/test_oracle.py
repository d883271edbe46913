from itertools import combinations

import pytest
from hypothesis import given

from covsolve import (
    EnumerationLimitError,
    MultiSolution,
    SetSolution,
    brute_decision,
    brute_setcover,
    complement,
    verify,
)
from helpers import cap, dem, instances


def test_capacities_example():
    inst = cap([{1, 2}, {2}, {1}], bounds=(1, 2), k=2)
    assert [s.picks for s in brute_setcover(inst)] == [(1, 2), (2, 3)]
    assert brute_decision(inst) == SetSolution((1, 2))


def test_multiset_example():
    inst = dem([{1}], bounds=(3,), k=3, multiplicities=True)
    assert brute_setcover(inst) == [MultiSolution((3,))]


def test_k_zero():
    assert brute_setcover(cap([{1}], bounds=(1,), k=0)) == [SetSolution(())]
    assert brute_setcover(dem([{1}], bounds=(0,), k=0)) == [SetSolution(())]
    assert brute_setcover(dem([{1}], bounds=(1,), k=0)) == []


def test_decision_no():
    assert brute_decision(cap([{1}, {1}], bounds=(1,), k=2)) is None


def test_priced_filtering():
    inst = cap(
        [{1}, {1}, set()], bounds=(1,), k=2, prices=(1, 2, 3), price_budget=4
    )
    assert [s.picks for s in brute_setcover(inst)] == [(1, 3)]


def test_lexicographic_order():
    inst = cap([set(), set(), set()], bounds=(), k=2)
    assert [s.picks for s in brute_setcover(inst)] == [(1, 2), (1, 3), (2, 3)]
    multi = cap([set(), set()], bounds=(), k=2, multiplicities=True)
    assert [s.counts for s in brute_setcover(multi)] == [(0, 2), (1, 1), (2, 0)]


@given(instances(max_n=3, max_m=3))
def test_listed_solutions_are_exactly_the_feasible_subsets(inst):
    listed = {s.picks for s in brute_setcover(inst)}
    for picks in combinations(range(1, inst.m + 1), inst.k):
        assert (picks in listed) == bool(verify(inst, SetSolution(picks)))


@given(instances(max_n=3, max_m=3, bounds_within_k=True))
def test_decisions_match_across_complement(inst):
    assert brute_setcover(inst) == brute_setcover(complement(inst))


def test_enumeration_guard():
    huge = cap([set()] * 60, bounds=(), k=30)
    with pytest.raises(EnumerationLimitError):
        brute_setcover(huge)
    huge_multi = cap([set()] * 40, bounds=(), k=40, multiplicities=True)
    with pytest.raises(EnumerationLimitError):
        brute_decision(huge_multi)
