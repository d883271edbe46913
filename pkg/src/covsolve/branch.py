"""Branch-and-bound solvers for capacity instances and their demand duals.

The search adds one set per level and only ever selects sets whose elements
all have free capacity, so every completed selection is feasible by
construction.  Entering a node, a saturation sweep retires each element whose
capacity is exactly met together with all sets containing it.  The node then
either succeeds (budget spent), fails (nothing selectable), or branches on a
pivot set and every selectable set overlapping it.  A solution extending the
current selection while avoiding all of those children could not touch the
pivot's elements at all, so an arbitrary member of it can be swapped for the
pivot; exploring the children with backtracking is therefore exhaustive, and
the first successful branch is returned.

Demand instances are solved by complementing every set and bound and running
the capacity search unchanged; the chosen indices transfer back verbatim.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Callable

from .core import (
    Mode,
    MultiSolution,
    SearchStats,
    SetCoverInstance,
    SetSolution,
    Solution,
)
from .transform import complement, map_solution


def _expect(instance: SetCoverInstance, mode: Mode, *, multi: bool, priced: bool) -> None:
    if instance.mode is not mode:
        raise ValueError(f"solver expects a {mode.value} instance")
    if instance.multiplicities != multi:
        raise ValueError("multiplicities flag does not match this solver")
    if (instance.prices is not None) != priced:
        raise ValueError("prices do not match this solver")


def _search(
    instance: SetCoverInstance,
    *,
    multi: bool,
    priced: bool,
    pivot_log: list | None = None,
) -> tuple[tuple[int, ...] | None, SearchStats]:
    n, m = instance.n, instance.m
    fam = instance.family
    caps = instance.bounds
    prices = instance.prices
    budget = instance.price_budget

    occ: list[set[int]] = [set() for _ in range(n + 1)]
    for j, f in enumerate(fam, start=1):
        for e in f:
            occ[e].add(j)
    # sets sharing at least one element with set j (including j itself)
    overlap: list[set[int]] = [set() for _ in range(m + 1)]
    for j, f in enumerate(fam, start=1):
        for e in f:
            overlap[j] |= occ[e]

    if priced:
        def order(j: int) -> tuple[int, int]:
            return (prices[j - 1], j)
    else:
        order = lambda j: j  # noqa: E731 - lowest index, for reproducible runs

    counters = [0, 0, 0]  # nodes visited, branches taken, deepest level

    def node(alive, pool, cover, chosen, spent, k_left, depth):
        counters[0] += 1
        counters[2] = max(counters[2], depth)
        if priced and spent > budget:
            return None
        # saturation sweep; coverage is fixed within a node, so the loop
        # settles after one effective round
        alive = set(alive)
        pool = set(pool)
        while True:
            full = [i for i in alive if cover[i] == caps[i - 1]]
            if not full:
                break
            for i in full:
                alive.discard(i)
                pool -= occ[i]
        if k_left == 0:
            return chosen
        if not pool:
            return None
        pivot = min(pool, key=order)
        if pivot_log is not None:
            pivot_log.append(
                (depth, prices[pivot - 1], min(prices[j - 1] for j in pool))
            )
        children = pool & overlap[pivot]
        children.add(pivot)
        for j in sorted(children, key=order):
            counters[1] += 1
            child_cover = list(cover)
            for e in fam[j - 1]:
                child_cover[e] += 1
            got = node(
                alive,
                pool if multi else pool - {j},
                child_cover,
                chosen + (j,),
                spent + (prices[j - 1] if priced else 0),
                k_left - 1,
                depth + 1,
            )
            if got is not None:
                return got
        return None

    chosen = node(
        set(range(1, n + 1)),
        set(range(1, m + 1)),
        [0] * (n + 1),
        (),
        0,
        instance.k,
        0,
    )
    return chosen, SearchStats(counters[0], counters[1], counters[2])


def solve_capacities(instance: SetCoverInstance) -> tuple[SetSolution | None, SearchStats]:
    """Find ``k`` distinct sets respecting every capacity, or None."""
    _expect(instance, Mode.CAPACITIES, multi=False, priced=False)
    chosen, stats = _search(instance, multi=False, priced=False)
    if chosen is None:
        return None, stats
    return SetSolution(chosen), stats


def solve_capacities_multi(
    instance: SetCoverInstance,
) -> tuple[MultiSolution | None, SearchStats]:
    """Find set multiplicities summing to ``k`` respecting every capacity, or None.

    Identical search, except a selected set stays selectable, so it can be
    chosen again on deeper levels.
    """
    _expect(instance, Mode.CAPACITIES, multi=True, priced=False)
    chosen, stats = _search(instance, multi=True, priced=False)
    if chosen is None:
        return None, stats
    counts = [0] * instance.m
    for j in chosen:
        counts[j - 1] += 1
    return MultiSolution(counts), stats


def solve_capacities_priced(
    instance: SetCoverInstance, *, pivot_log: list | None = None
) -> tuple[SetSolution | None, SearchStats]:
    """As :func:`solve_capacities`, keeping the total price within the budget.

    A branch is abandoned as soon as the accumulated price exceeds the
    budget.  The pivot is always a cheapest selectable set (ties to the
    lowest index), which keeps the swap reasoning valid: a solution avoiding
    the pivot and its overlaps pays at least the pivot's price for each of
    its remaining members.  ``pivot_log``, when given, collects one
    ``(depth, pivot price, cheapest available price)`` triple per node.
    """
    _expect(instance, Mode.CAPACITIES, multi=False, priced=True)
    chosen, stats = _search(instance, multi=False, priced=True, pivot_log=pivot_log)
    if chosen is None:
        return None, stats
    return SetSolution(chosen), stats


def _via_complement(
    instance: SetCoverInstance,
    capacity_solver: Callable[[SetCoverInstance], tuple[Solution | None, SearchStats]],
) -> tuple[Solution | None, SearchStats]:
    if any(b > instance.k for b in instance.bounds):
        # a demand above k can never be met by k sets, multiset or not
        return None, SearchStats(0, 0, 0)
    solution, stats = capacity_solver(complement(instance))
    if solution is None:
        return None, stats
    return map_solution(solution), stats


def solve_demands(instance: SetCoverInstance) -> tuple[SetSolution | None, SearchStats]:
    """Find ``k`` distinct sets meeting every demand, or None."""
    _expect(instance, Mode.DEMANDS, multi=False, priced=False)
    return _via_complement(instance, solve_capacities)


def solve_demands_multi(
    instance: SetCoverInstance,
) -> tuple[MultiSolution | None, SearchStats]:
    """Multiset variant of :func:`solve_demands`."""
    _expect(instance, Mode.DEMANDS, multi=True, priced=False)
    return _via_complement(instance, solve_capacities_multi)


def solve_demands_priced(
    instance: SetCoverInstance,
) -> tuple[SetSolution | None, SearchStats]:
    """Priced variant of :func:`solve_demands`."""
    _expect(instance, Mode.DEMANDS, multi=False, priced=True)
    return _via_complement(instance, solve_capacities_priced)


def solve_priced_anyk(instance: SetCoverInstance) -> Solution | None:
    """Decide a priced instance when the cardinality ``k`` is not prescribed.

    ``instance.k`` is ignored.  With every price at least 1, any affordable
    selection has at most ``price_budget`` members, so the fixed-cardinality
    solver is tried for each candidate size in turn.  For a demands instance
    whose demands are all zero the empty selection answers directly.
    """
    if instance.prices is None:
        raise ValueError("instance has no prices")
    if instance.multiplicities:
        raise ValueError("priced search with multiplicities is not supported")
    if any(p == 0 for p in instance.prices):
        raise ValueError("all prices must be at least 1 to bound the selection size")
    if instance.mode is Mode.DEMANDS and all(b == 0 for b in instance.bounds):
        return SetSolution(())
    solver = (
        solve_capacities_priced
        if instance.mode is Mode.CAPACITIES
        else solve_demands_priced
    )
    for k in range(1, instance.price_budget + 1):
        solution, _ = solver(replace(instance, k=k))
        if solution is not None:
            return solution
    return None
