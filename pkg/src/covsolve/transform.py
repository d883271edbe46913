"""Complement reduction between demands and capacities instances."""

from __future__ import annotations

from dataclasses import replace

from .core import Mode, SetCoverInstance, Solution


class TriviallyInfeasible(Exception):
    """Raised by :func:`complement` when some bound exceeds ``k``.

    For a demands instance this means no selection of ``k`` sets can meet the
    demand (coverage is at most ``k``, with or without multiplicities), so
    callers may answer NO outright instead of transforming.
    """


def complement(instance: SetCoverInstance) -> SetCoverInstance:
    """Return the equivalent instance of the opposite mode.

    Every set is replaced by its complement within ``1..n`` and every bound
    ``b`` by ``k - b``; any candidate selection covering element ``i`` a
    total of ``c`` times covers it ``k - c`` times afterwards, so the same
    selections solve both instances.  ``k``, prices, the price budget and the
    multiplicities flag are carried over unchanged.
    """
    for i, b in enumerate(instance.bounds, start=1):
        if b > instance.k:
            raise TriviallyInfeasible(
                f"bound {b} of element {i} exceeds k={instance.k}"
            )
    universe = frozenset(range(1, instance.n + 1))
    return replace(
        instance,
        family=tuple(universe - f for f in instance.family),
        mode=Mode.CAPACITIES if instance.mode is Mode.DEMANDS else Mode.DEMANDS,
        bounds=tuple(instance.k - b for b in instance.bounds),
    )


def map_solution(solution: Solution) -> Solution:
    """Map a solution across :func:`complement`.

    The mapping is the identity: the same picks (or multiplicity vector)
    answer an instance and its complement, which this function exists to
    document and to pin down in tests.
    """
    return solution
