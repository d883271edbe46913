"""A simpler capacity solver with a size threshold on the surviving family.

Zero-capacity elements go first: a set containing one can never be chosen, so
all such sets are dropped wholesale.  If few sets survive, every k-subset is
checked directly.  A large surviving family guarantees a solution outright,
and a greedy pass constructs it: picking a set saturates at most ``s_max`` of
its elements, each occurring in at most ``o_max`` sets, so at most
``s_max * o_max`` sets leave the pool per pick and the pool never runs dry.
"""

from __future__ import annotations

from dataclasses import replace
from itertools import combinations

from .core import Mode, SetCoverInstance, SetSolution, verify
from .transform import complement, map_solution


def _expect_plain(instance: SetCoverInstance, mode: Mode) -> None:
    if instance.mode is not mode:
        raise ValueError(f"solver expects a {mode.value} instance")
    if instance.multiplicities:
        raise ValueError("threshold solver does not handle multiplicities")
    if instance.prices is not None:
        raise ValueError("threshold solver does not handle prices")


def _drop_zero_capacity_sets(
    instance: SetCoverInstance,
) -> tuple[list[int], SetCoverInstance]:
    """Remove every set containing a zero-capacity element.

    Elements stay in place: once no surviving set contains it, a
    zero-capacity element constrains nothing, and unchanged element ids let
    the surviving sets be reused verbatim.  Returns the survivors' original
    indices and the reduced instance.
    """
    keep = [
        j
        for j, f in enumerate(instance.family, start=1)
        if all(instance.bounds[e - 1] > 0 for e in f)
    ]
    reduced = replace(instance, family=tuple(instance.family[j - 1] for j in keep))
    return keep, reduced


def _reduced_extrema(instance: SetCoverInstance) -> tuple[int, int]:
    s_max = max((len(f) for f in instance.family), default=0)
    occ = [0] * (instance.n + 1)
    for f in instance.family:
        for e in f:
            occ[e] += 1
    o_max = max(occ[1:], default=0)
    return s_max, o_max


def greedy_construct(instance: SetCoverInstance, k: int) -> SetSolution:
    """Pick ``k`` sets from a zero-capacity-free instance that is large enough.

    Requires ``m > k * s_max * o_max``, or ``m >= k`` when every set is
    empty; under that bound a selectable set always remains, so the result is
    a valid solution of exactly ``k`` distinct sets.  Picks resolve to the
    lowest remaining index.
    """
    _expect_plain(instance, Mode.CAPACITIES)
    if k < 0:
        raise ValueError("k must be non-negative")
    for j, f in enumerate(instance.family, start=1):
        for e in f:
            if instance.bounds[e - 1] == 0:
                raise ValueError(
                    f"set {j} contains zero-capacity element {e}; preprocess first"
                )
    s_max, o_max = _reduced_extrema(instance)
    if s_max * o_max:
        if instance.m <= k * s_max * o_max:
            raise ValueError("family too small for greedy construction")
    elif instance.m < k:
        raise ValueError("family too small for greedy construction")
    cover = [0] * (instance.n + 1)
    pool = list(range(1, instance.m + 1))  # ascending, so picks come out sorted
    chosen = []
    for _ in range(k):
        j = pool.pop(0)
        chosen.append(j)
        newly_full = set()
        for e in instance.family[j - 1]:
            cover[e] += 1
            if cover[e] == instance.bounds[e - 1]:
                newly_full.add(e)
        if newly_full:
            pool = [x for x in pool if not (instance.family[x - 1] & newly_full)]
    return SetSolution(chosen)


def solve_capacities_threshold(
    instance: SetCoverInstance, trace: dict | None = None
) -> SetSolution | None:
    """Decide a plain capacities instance.

    ``trace``, when given, records the surviving family size, its extrema,
    the route taken (``"brute"`` or ``"greedy"``) and, on the brute route,
    how many subsets were examined.
    """
    _expect_plain(instance, Mode.CAPACITIES)
    keep, reduced = _drop_zero_capacity_sets(instance)
    s_max, o_max = _reduced_extrema(reduced)
    if s_max * o_max:
        small = reduced.m <= instance.k * s_max * o_max
    else:
        small = reduced.m <= instance.k
    if trace is not None:
        trace.update(
            reduced_m=reduced.m,
            s_max=s_max,
            o_max=o_max,
            route="brute" if small else "greedy",
        )
    if not small:
        inner = greedy_construct(reduced, instance.k)
        return SetSolution(tuple(keep[j - 1] for j in inner.picks))
    answer = None
    examined = 0
    for picks in combinations(range(1, reduced.m + 1), instance.k):
        examined += 1
        if verify(reduced, SetSolution(picks)):
            answer = SetSolution(tuple(keep[j - 1] for j in picks))
            break
    if trace is not None:
        trace["subsets_examined"] = examined
    return answer


def solve_demands_threshold(
    instance: SetCoverInstance, trace: dict | None = None
) -> SetSolution | None:
    """Complement the instance and run the capacity threshold solver."""
    _expect_plain(instance, Mode.DEMANDS)
    if any(b > instance.k for b in instance.bounds):
        return None
    answer = solve_capacities_threshold(complement(instance), trace=trace)
    return map_solution(answer) if answer is not None else None
