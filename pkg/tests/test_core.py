import pytest
from hypothesis import given
from hypothesis import strategies as st

from covsolve import (
    Mode,
    MultiSolution,
    SetCoverInstance,
    SetSolution,
    coverage,
    extremal_stats,
    neighborhood,
    occurrences,
    verify,
)
from helpers import cap, dem, instances


def test_occurrences():
    inst = cap([{1, 2}, {2}], bounds=(1, 1), k=1)
    assert occurrences(inst, 1) == {1}
    assert occurrences(inst, 2) == {1, 2}
    lonely = cap([{2}], bounds=(1, 1), k=1)
    assert occurrences(lonely, 1) == frozenset()


def test_occurrences_range_error():
    inst = cap([{1}], bounds=(1,), k=1)
    with pytest.raises(ValueError):
        occurrences(inst, 0)
    with pytest.raises(ValueError):
        occurrences(inst, 2)


def test_neighborhood():
    inst = cap([{1}, {2}, {1, 2}], bounds=(1, 1), k=1)
    assert neighborhood(inst, {1}) == {1, 3}
    assert neighborhood(inst, set()) == frozenset()
    assert neighborhood(inst, {1, 2}) == {1, 2, 3}
    with pytest.raises(ValueError):
        neighborhood(inst, {0})


@given(instances())
def test_neighborhood_of_singleton_is_occurrences(inst):
    for i in range(1, inst.n + 1):
        assert neighborhood(inst, {i}) == occurrences(inst, i)


def test_extremal_stats():
    stats = extremal_stats(cap([{1, 2}, {2}], bounds=(1, 1), k=1))
    assert (stats.s_min, stats.s_max, stats.o_min, stats.o_max) == (1, 2, 1, 2)
    stats = extremal_stats(cap([{1}, {1}], bounds=(1,), k=1))
    assert (stats.s_min, stats.s_max, stats.o_min, stats.o_max) == (1, 1, 2, 2)
    stats = extremal_stats(cap([set(), {1}], bounds=(1,), k=1))
    assert (stats.s_min, stats.s_max, stats.o_min, stats.o_max) == (0, 1, 1, 1)


def test_extremal_stats_needs_nonempty():
    empty_family = SetCoverInstance(n=1, family=(), mode=Mode.CAPACITIES, bounds=(1,), k=0)
    with pytest.raises(ValueError):
        extremal_stats(empty_family)
    empty_universe = SetCoverInstance(
        n=0, family=(frozenset(),), mode=Mode.CAPACITIES, bounds=(), k=0
    )
    with pytest.raises(ValueError):
        extremal_stats(empty_universe)


@given(instances())
def test_double_counting(inst):
    by_sets = sum(len(f) for f in inst.family)
    by_elements = sum(len(occurrences(inst, i)) for i in range(1, inst.n + 1))
    assert by_sets == by_elements


def test_coverage():
    inst = dem([{1}, {1, 2}], bounds=(1, 1), k=2)
    assert coverage(inst, SetSolution((1, 2)), 1) == 2
    multi = dem([{1}], bounds=(3,), k=3, multiplicities=True)
    assert coverage(multi, MultiSolution((3,)), 1) == 3
    assert coverage(inst, SetSolution((1,)), 2) == 0


def test_coverage_input_errors():
    inst = dem([{1}, {1, 2}], bounds=(1, 1), k=2)
    with pytest.raises(ValueError):
        coverage(inst, SetSolution((1, 2)), 3)
    with pytest.raises(ValueError):
        coverage(inst, SetSolution((3,)), 1)
    with pytest.raises(ValueError):
        coverage(inst, MultiSolution((1, 1)), 1)  # shape mismatch
    multi = dem([{1}], bounds=(1,), k=1, multiplicities=True)
    with pytest.raises(ValueError):
        coverage(multi, MultiSolution((1, 1)), 1)  # length mismatch


def test_verify_demands():
    # all three 2-subsets of [{1},{1,2},{2}] checked by hand: only [1,2]
    # covers element 1 twice
    inst = dem([{1}, {1, 2}, {2}], bounds=(2, 1), k=2)
    assert verify(inst, SetSolution((1, 2)))
    assert not verify(inst, SetSolution((1, 3)))
    assert not verify(inst, SetSolution((2, 3)))


def test_verify_capacities_names_first_violation():
    inst = cap([{1, 2}, {2}, {1}], bounds=(1, 2), k=2)
    assert verify(inst, SetSolution((1, 2)))
    assert verify(inst, SetSolution((2, 3)))
    verdict = verify(inst, SetSolution((1, 3)))
    assert not verdict
    assert "element 1" in verdict.reason


def test_verify_vacuous():
    inst = dem([{1}, {2}], bounds=(0, 0), k=0)
    assert verify(inst, SetSolution(()))


def test_verify_cardinality_checked_before_elements():
    inst = dem([{1}], bounds=(1,), k=2)
    verdict = verify(inst, SetSolution((1,)))
    assert not verdict and "expected k=2" in verdict.reason
    multi = dem([{1}], bounds=(1,), k=2, multiplicities=True)
    verdict = verify(multi, MultiSolution((1,)))
    assert not verdict and "expected k=2" in verdict.reason


def test_verify_price_budget():
    inst = cap(
        [{1}, {1}], bounds=(2,), k=2, prices=(3, 3), price_budget=5
    )
    verdict = verify(inst, SetSolution((1, 2)))
    assert not verdict and "price" in verdict.reason
    ok = cap([{1}, {1}], bounds=(2,), k=2, prices=(2, 3), price_budget=5)
    assert verify(ok, SetSolution((1, 2)))


def test_verify_shape_mismatch_raises():
    inst = dem([{1}], bounds=(1,), k=1)
    with pytest.raises(ValueError):
        verify(inst, MultiSolution((1,)))
    multi = dem([{1}], bounds=(1,), k=1, multiplicities=True)
    with pytest.raises(ValueError):
        verify(multi, SetSolution((1,)))


@given(instances(max_n=4, max_m=4, max_k=3), st.data())
def test_binary_multiplicities_match_set_picks(inst, data):
    picks = data.draw(st.sets(st.integers(1, inst.m)))
    multi_twin = SetCoverInstance(
        n=inst.n,
        family=inst.family,
        mode=inst.mode,
        bounds=inst.bounds,
        k=inst.k,
        multiplicities=True,
    )
    counts = tuple(1 if j in picks else 0 for j in range(1, inst.m + 1))
    for i in range(1, inst.n + 1):
        assert coverage(inst, SetSolution(tuple(picks)), i) == coverage(
            multi_twin, MultiSolution(counts), i
        )


def test_instance_validation():
    with pytest.raises(ValueError):
        cap([{3}], bounds=(1, 1), k=1)  # element out of range
    with pytest.raises(ValueError):
        SetCoverInstance(n=2, family=(frozenset(),), mode=Mode.DEMANDS, bounds=(1,), k=1)
    with pytest.raises(ValueError):
        cap([{1}], bounds=(-1,), k=1)
    with pytest.raises(ValueError):
        cap([{1}], bounds=(1,), k=-1)
    with pytest.raises(ValueError):
        cap([{1}], bounds=(1,), k=1, prices=(1,))  # budget missing
    with pytest.raises(ValueError):
        cap([{1}], bounds=(1,), k=1, prices=(1, 2), price_budget=3)
    with pytest.raises(ValueError):
        cap([{1}], bounds=(1,), k=1, prices=(-1,), price_budget=3)


def test_solution_normalization():
    assert SetSolution((3, 1, 2)).picks == (1, 2, 3)
    with pytest.raises(ValueError):
        SetSolution((1, 1))
    with pytest.raises(ValueError):
        MultiSolution((1, -1))


def test_duplicate_and_empty_sets_are_legal():
    inst = cap([{1}, {1}, set()], bounds=(2,), k=3)
    assert inst.m == 3
    assert verify(inst, SetSolution((1, 2, 3)))
