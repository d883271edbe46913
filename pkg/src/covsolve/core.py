"""Core model for covering instances with per-element demands or capacities.

Elements are identified by ``1..n`` and sets by their 1-based position in the
family.  The family is an ordered list: duplicate sets and empty sets are both
legal, and solutions always refer to set positions, never to set contents.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable


class Mode(enum.Enum):
    """Whether bounds are lower limits (demands) or upper limits (capacities)."""

    DEMANDS = "demands"
    CAPACITIES = "capacities"


@dataclass(frozen=True)
class SetCoverInstance:
    """A covering instance asking for exactly ``k`` selected sets.

    ``bounds[i-1]`` is the demand of element ``i`` (minimum number of chosen
    sets containing it) in demands mode, or its capacity (maximum allowed) in
    capacities mode.  ``prices`` and ``price_budget`` appear together or not
    at all.  With ``multiplicities`` a solution assigns a count to every set
    instead of picking distinct ones.
    """

    n: int
    family: tuple[frozenset[int], ...]
    mode: Mode
    bounds: tuple[int, ...]
    k: int
    prices: tuple[int, ...] | None = None
    price_budget: int | None = None
    multiplicities: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", tuple(frozenset(f) for f in self.family))
        object.__setattr__(self, "bounds", tuple(int(b) for b in self.bounds))
        if self.prices is not None:
            object.__setattr__(self, "prices", tuple(int(p) for p in self.prices))
        if self.n < 0:
            raise ValueError("universe size must be non-negative")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        for j, f in enumerate(self.family, start=1):
            for e in f:
                if not 1 <= e <= self.n:
                    raise ValueError(f"set {j}: element {e} outside 1..{self.n}")
        if len(self.bounds) != self.n:
            raise ValueError(f"expected {self.n} bounds, got {len(self.bounds)}")
        for i, b in enumerate(self.bounds, start=1):
            if b < 0:
                raise ValueError(f"bound of element {i} must be non-negative, got {b}")
        if (self.prices is None) != (self.price_budget is None):
            raise ValueError("prices and price_budget must be given together")
        if self.prices is not None:
            if len(self.prices) != len(self.family):
                raise ValueError(f"expected {len(self.family)} prices, got {len(self.prices)}")
            if any(p < 0 for p in self.prices):
                raise ValueError("prices must be non-negative")
            if self.price_budget < 0:
                raise ValueError("price budget must be non-negative")

    @property
    def m(self) -> int:
        """Number of sets in the family."""
        return len(self.family)


@dataclass(frozen=True)
class SetSolution:
    """``k`` distinct set indices, kept sorted."""

    picks: tuple[int, ...]

    def __post_init__(self) -> None:
        picks = tuple(sorted(int(j) for j in self.picks))
        if len(set(picks)) != len(picks):
            raise ValueError("set indices must be distinct")
        object.__setattr__(self, "picks", picks)


@dataclass(frozen=True)
class MultiSolution:
    """One non-negative multiplicity per set."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise ValueError("multiplicities must be non-negative")
        object.__setattr__(self, "counts", counts)


Solution = SetSolution | MultiSolution


@dataclass(frozen=True)
class InstanceStats:
    """Extremal set sizes and element occurrence counts."""

    s_min: int
    s_max: int
    o_min: int
    o_max: int


@dataclass(frozen=True)
class SearchStats:
    """Counters describing one branch-solver run."""

    nodes_visited: int
    branches_taken: int
    max_depth: int


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`verify`; falsy when invalid, naming the first violation."""

    valid: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def occurrences(instance: SetCoverInstance, element: int) -> frozenset[int]:
    """Indices of the sets containing ``element``."""
    if not 1 <= element <= instance.n:
        raise ValueError(f"element {element} outside 1..{instance.n}")
    return frozenset(j for j, f in enumerate(instance.family, start=1) if element in f)


def neighborhood(instance: SetCoverInstance, elements: Iterable[int]) -> frozenset[int]:
    """Indices of the sets containing at least one of ``elements``."""
    hit: set[int] = set()
    for i in elements:
        hit |= occurrences(instance, i)
    return frozenset(hit)


def extremal_stats(instance: SetCoverInstance) -> InstanceStats:
    """Smallest and largest set size and element occurrence count."""
    if instance.m == 0 or instance.n == 0:
        raise ValueError("extremal statistics need a non-empty family and universe")
    sizes = [len(f) for f in instance.family]
    occ = [0] * (instance.n + 1)
    for f in instance.family:
        for e in f:
            occ[e] += 1
    return InstanceStats(min(sizes), max(sizes), min(occ[1:]), max(occ[1:]))


def _checked_counts(instance: SetCoverInstance, solution: Solution) -> list[int]:
    """Coverage per element, validating the solution shape against the instance."""
    counts = [0] * (instance.n + 1)
    if isinstance(solution, SetSolution):
        if instance.multiplicities:
            raise ValueError("instance expects a multiplicity vector, got set picks")
        for j in solution.picks:
            if not 1 <= j <= instance.m:
                raise ValueError(f"set index {j} outside 1..{instance.m}")
            for e in instance.family[j - 1]:
                counts[e] += 1
    elif isinstance(solution, MultiSolution):
        if not instance.multiplicities:
            raise ValueError("instance expects set picks, got a multiplicity vector")
        if len(solution.counts) != instance.m:
            raise ValueError(f"expected {instance.m} multiplicities, got {len(solution.counts)}")
        for j, c in enumerate(solution.counts):
            if c:
                for e in instance.family[j]:
                    counts[e] += c
    else:
        raise TypeError(f"not a solution: {solution!r}")
    return counts


def coverage(instance: SetCoverInstance, solution: Solution, element: int) -> int:
    """How many chosen sets, counted with multiplicity, contain ``element``."""
    if not 1 <= element <= instance.n:
        raise ValueError(f"element {element} outside 1..{instance.n}")
    return _checked_counts(instance, solution)[element]


def total_price(instance: SetCoverInstance, solution: Solution) -> int:
    """Total price of the chosen sets, counted with multiplicity."""
    if instance.prices is None:
        raise ValueError("instance has no prices")
    if isinstance(solution, SetSolution):
        return sum(instance.prices[j - 1] for j in solution.picks)
    return sum(c * p for c, p in zip(solution.counts, instance.prices))


def verify(instance: SetCoverInstance, solution: Solution) -> Verdict:
    """Check cardinality, every per-element bound, and the price budget.

    Constraints are checked in that order, elements in increasing order, and
    the verdict carries the first violation.  Malformed combinations (wrong
    solution shape, out-of-range indices) raise instead of returning a
    verdict.
    """
    counts = _checked_counts(instance, solution)
    if isinstance(solution, SetSolution):
        size = len(solution.picks)
        if size != instance.k:
            return Verdict(False, f"{size} sets picked, expected k={instance.k}")
    else:
        size = sum(solution.counts)
        if size != instance.k:
            return Verdict(False, f"multiplicities sum to {size}, expected k={instance.k}")
    for i in range(1, instance.n + 1):
        got = counts[i]
        bound = instance.bounds[i - 1]
        if instance.mode is Mode.DEMANDS:
            if got < bound:
                return Verdict(False, f"element {i}: coverage {got} below demand {bound}")
        elif got > bound:
            return Verdict(False, f"element {i}: coverage {got} exceeds capacity {bound}")
    if instance.prices is not None:
        spent = total_price(instance, solution)
        if spent > instance.price_budget:
            return Verdict(False, f"total price {spent} exceeds budget {instance.price_budget}")
    return Verdict(True)
