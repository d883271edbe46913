"""Exhaustive reference solvers, kept deliberately simple for differential tests."""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator

from .core import MultiSolution, SetCoverInstance, SetSolution, Solution, verify

ENUMERATION_LIMIT = 10_000_000


class EnumerationLimitError(RuntimeError):
    """The candidate space is too large to enumerate; shrink the instance."""


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # ascending lexicographic order over multiplicity vectors
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _candidate_count(instance: SetCoverInstance) -> int:
    m, k = instance.m, instance.k
    if instance.multiplicities:
        if m == 0:
            return 1 if k == 0 else 0
        return comb(k + m - 1, m - 1)
    return comb(m, k)


def _feasible(instance: SetCoverInstance) -> Iterator[Solution]:
    count = _candidate_count(instance)
    if count > ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"{count} candidate solutions exceed the limit of {ENUMERATION_LIMIT}"
        )
    if instance.multiplicities:
        for counts in _compositions(instance.k, instance.m):
            solution = MultiSolution(counts)
            if verify(instance, solution):
                yield solution
    else:
        for picks in combinations(range(1, instance.m + 1), instance.k):
            solution = SetSolution(picks)
            if verify(instance, solution):
                yield solution


def brute_setcover(instance: SetCoverInstance) -> list[Solution]:
    """Every feasible solution, in lexicographic order.

    Priced instances are filtered by the price budget as part of
    :func:`~covsolve.core.verify`.
    """
    return list(_feasible(instance))


def brute_decision(instance: SetCoverInstance) -> Solution | None:
    """First feasible solution in enumeration order, or None."""
    return next(_feasible(instance), None)
