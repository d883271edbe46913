from itertools import combinations

import pytest
from hypothesis import given

from covsolve import (
    Mode,
    MultiSolution,
    SetSolution,
    TriviallyInfeasible,
    complement,
    extremal_stats,
    map_solution,
    verify,
)
from helpers import cap, dem, instances


def test_complement_example():
    inst = dem([{1, 2}, {2, 3}], bounds=(1, 2, 1), k=2)
    out = complement(inst)
    assert out.mode is Mode.CAPACITIES
    assert out.family == (frozenset({3}), frozenset({1}))
    assert out.bounds == (1, 0, 1)
    assert out.k == 2
    # largest complemented set size is the universe minus the smallest input set
    assert extremal_stats(out).s_max == inst.n - extremal_stats(inst).s_min == 1


def test_complement_carries_variant_fields():
    inst = dem(
        [{1}], bounds=(1,), k=1, prices=(4,), price_budget=9, multiplicities=False
    )
    out = complement(inst)
    assert out.prices == (4,) and out.price_budget == 9
    multi = dem([{1}], bounds=(1,), k=2, multiplicities=True)
    assert complement(multi).multiplicities


def test_complement_rejects_bound_above_k():
    with pytest.raises(TriviallyInfeasible):
        complement(dem([{1}], bounds=(3,), k=2))
    with pytest.raises(TriviallyInfeasible):
        complement(cap([{1}], bounds=(3,), k=2))


@given(instances(bounds_within_k=True))
def test_complement_is_an_involution(inst):
    assert complement(complement(inst)) == inst


@given(instances(max_n=3, max_m=3, bounds_within_k=True))
def test_verify_is_invariant_under_complement(inst):
    out = complement(inst)
    for size in range(inst.m + 1):
        for picks in combinations(range(1, inst.m + 1), size):
            solution = SetSolution(picks)
            assert bool(verify(inst, solution)) == bool(verify(out, solution))


@given(instances(max_n=5, max_m=5, bounds_within_k=True))
def test_parameter_identities(inst):
    before = extremal_stats(inst)
    after = extremal_stats(complement(inst))
    assert after.s_max == inst.n - before.s_min
    assert after.s_min == inst.n - before.s_max
    assert after.o_max == inst.m - before.o_min
    assert after.o_min == inst.m - before.o_max


def test_map_solution_is_identity():
    inst = dem([{1, 2}, {2, 3}], bounds=(1, 2, 1), k=2)
    solution = SetSolution((1, 2))
    assert map_solution(solution) is solution
    assert verify(inst, solution)
    assert verify(complement(inst), map_solution(solution))
    assert map_solution(SetSolution(())) == SetSolution(())


def test_map_solution_multiset():
    inst = dem([{1}], bounds=(3,), k=3, multiplicities=True)
    out = complement(inst)
    assert out.family == (frozenset(),) and out.bounds == (0,)
    solution = MultiSolution((3,))
    assert verify(inst, solution)
    assert verify(out, map_solution(solution))
