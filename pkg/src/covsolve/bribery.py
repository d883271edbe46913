"""Consent-rule group identification and constructive agent bribery.

Every agent holds an opinion (+1 or -1) on every agent, itself included.
Under the consent rule with thresholds ``(s, t)``, a self-approving agent is
socially qualified iff at least ``s`` agents approve it, while a
self-disapproving agent is socially disqualified iff at least ``t`` agents
disapprove it.  A bribe rewrites the bribed agent's whole row to approvals.
Such a bribe can only add approvals, so growing a bribe set never disqualifies
anyone who was qualified, which makes searching over bribe sets of bounded
size exhaustive.

The solvers decide whether at most ``ell`` bribes make every target socially
qualified.  With ``t = 1`` any self-disapproving target must itself be bribed,
after which each remaining target just needs extra approvals; covering those
missing approvals with bribed rows is a demands covering instance over the
targets.  For general ``t`` the self-disapproving targets are first resolved
by branching on who gets bribed, and the ``t = 1`` machinery finishes the job.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from math import comb
from typing import Iterable

from .branch import solve_demands
from .core import Mode, SetCoverInstance
from .oracle import EnumerationLimitError

BRIBERY_ENUMERATION_LIMIT = 1_000_000

BribeSet = tuple[int, ...]


@dataclass(frozen=True)
class QualificationProfile:
    """Square opinion matrix; ``rows[a-1][b-1]`` is agent ``a``'s view of ``b``."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in r) for r in self.rows))
        if self.n < 0:
            raise ValueError("agent count must be non-negative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for a, row in enumerate(self.rows, start=1):
            if len(row) != self.n:
                raise ValueError(f"row {a} has {len(row)} entries, expected {self.n}")
            if any(v not in (-1, 1) for v in row):
                raise ValueError(f"row {a} contains an opinion outside {{-1, 1}}")

    def opinion(self, a: int, b: int) -> int:
        """Agent ``a``'s opinion of agent ``b``."""
        if not (1 <= a <= self.n and 1 <= b <= self.n):
            raise ValueError(f"agent pair ({a}, {b}) outside 1..{self.n}")
        return self.rows[a - 1][b - 1]


@dataclass(frozen=True)
class BriberyInstance:
    """Targets to make socially qualified with at most ``ell`` bribes."""

    profile: QualificationProfile
    targets: tuple[int, ...]
    s: int
    t: int
    ell: int

    def __post_init__(self) -> None:
        targets = tuple(sorted({int(a) for a in self.targets}))
        object.__setattr__(self, "targets", targets)
        n = self.profile.n
        _check_consent_thresholds(n, self.s, self.t)
        if any(not 1 <= a <= n for a in targets):
            raise ValueError(f"targets must lie in 1..{n}")
        if self.ell < 0:
            raise ValueError("bribe budget must be non-negative")


def _check_consent_thresholds(n: int, s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise ValueError("consent thresholds must be at least 1")
    if s + t > n + 2:
        raise ValueError(f"consent thresholds need s + t <= n + 2, got {s} + {t} > {n + 2}")


def qualifiers(profile: QualificationProfile, a: int) -> frozenset[int]:
    """Agents approving ``a`` (including ``a`` itself when it self-approves)."""
    if not 1 <= a <= profile.n:
        raise ValueError(f"agent {a} outside 1..{profile.n}")
    return frozenset(b for b in range(1, profile.n + 1) if profile.rows[b - 1][a - 1] == 1)


def disqualifiers(profile: QualificationProfile, a: int) -> frozenset[int]:
    """Agents disapproving ``a``; partitions the agents together with :func:`qualifiers`."""
    if not 1 <= a <= profile.n:
        raise ValueError(f"agent {a} outside 1..{profile.n}")
    return frozenset(b for b in range(1, profile.n + 1) if profile.rows[b - 1][a - 1] == -1)


def socially_qualified(profile: QualificationProfile, s: int, t: int) -> frozenset[int]:
    """Agents selected by the consent rule with thresholds ``(s, t)``."""
    _check_consent_thresholds(profile.n, s, t)
    chosen = set()
    for a in range(1, profile.n + 1):
        if profile.rows[a - 1][a - 1] == 1:
            if len(qualifiers(profile, a)) >= s:
                chosen.add(a)
        elif len(disqualifiers(profile, a)) < t:
            chosen.add(a)
    return frozenset(chosen)


def apply_bribe(profile: QualificationProfile, bribes: Iterable[int]) -> QualificationProfile:
    """Rewrite each bribed agent's row to all approvals."""
    bribed = set(bribes)
    if any(not 1 <= a <= profile.n for a in bribed):
        raise ValueError(f"bribed agents must lie in 1..{profile.n}")
    all_ones = (1,) * profile.n
    rows = tuple(
        all_ones if a in bribed else profile.rows[a - 1]
        for a in range(1, profile.n + 1)
    )
    return QualificationProfile(profile.n, rows)


def delta(instance: BriberyInstance) -> int:
    """Largest number of targets that any single agent approves."""
    profile, targets = instance.profile, instance.targets
    return max(
        (
            sum(1 for b in targets if profile.rows[a - 1][b - 1] == 1)
            for a in range(1, profile.n + 1)
        ),
        default=0,
    )


def reduce_to_demands(
    profile: QualificationProfile, targets: Iterable[int], s: int
) -> tuple[SetCoverInstance, tuple[int, ...]]:
    """Covering instance whose size-``k`` solutions are the useful bribe sets.

    Universe positions follow the targets in increasing order; each target's
    demand is the number of approvals it still misses.  Every agent whose row
    is not yet all approvals contributes the set of targets it currently
    disapproves, since bribing that agent grants exactly those approvals.
    Callers pick ``k`` on the returned instance via ``dataclasses.replace``.
    Also returns, per set position, the agent that the set stands for.

    Every target must self-approve and not yet be socially qualified.
    """
    targets = tuple(sorted(set(targets)))
    for a in targets:
        if profile.opinion(a, a) != 1:
            raise ValueError(f"target {a} must approve itself")
        if len(qualifiers(profile, a)) >= s:
            raise ValueError(f"target {a} is already socially qualified")
    position = {a: i for i, a in enumerate(targets, start=1)}
    demands = tuple(s - len(qualifiers(profile, a)) for a in targets)
    family = []
    set_agents = []
    for a in range(1, profile.n + 1):
        row = profile.rows[a - 1]
        if all(v == 1 for v in row):
            continue
        family.append(frozenset(position[b] for b in targets if row[b - 1] == -1))
        set_agents.append(a)
    instance = SetCoverInstance(
        n=len(targets),
        family=tuple(family),
        mode=Mode.DEMANDS,
        bounds=demands,
        k=0,
    )
    return instance, tuple(set_agents)


def _unqualified_targets(
    profile: QualificationProfile, targets: Iterable[int], s: int, t: int
) -> tuple[int, ...]:
    qualified = socially_qualified(profile, s, t)
    return tuple(a for a in targets if a not in qualified)


def _cover_missing_approvals(
    profile: QualificationProfile,
    targets: tuple[int, ...],
    s: int,
    budget: int,
    bribed: set[int],
    reduction_log: list | None = None,
) -> tuple[int, ...] | None:
    """Extra bribes qualifying self-approving, not-yet-qualified targets.

    Valid for any ``t``: the consent status of a self-approving agent is
    governed by the ``s`` clause alone.  With ``budget >= s`` there is no
    need to search, because ``s`` fresh all-approving rows qualify every
    target at once.  Otherwise the missing approvals are covered through the
    demands reduction, trying each selection size within the budget.
    """
    if not targets:
        return ()
    if s > profile.n:
        return None  # nobody can ever collect s approvals
    if budget >= s:
        unbribed = [a for a in range(1, profile.n + 1) if a not in bribed]
        return tuple(unbribed[:s])
    base, set_agents = reduce_to_demands(profile, targets, s)
    for k in range(budget + 1):
        sized = replace(base, k=k)
        if reduction_log is not None:
            reduction_log.append({"instance": sized, "k": k, "s": s, "budget": budget})
        solution, _ = solve_demands(sized)
        if solution is not None:
            return tuple(set_agents[j - 1] for j in solution.picks)
    return None


def solve_bribery_t1(
    instance: BriberyInstance, *, reduction_log: list | None = None
) -> BribeSet | None:
    """Decide the bribery question for ``t = 1``.

    A self-disapproving target always has at least one disapprover (itself),
    so for ``t = 1`` it can never become qualified unless it is bribed; those
    bribes are forced.  ``reduction_log``, when given, collects every covering
    instance tried in the final phase.
    """
    if instance.t != 1:
        raise ValueError("this solver handles t=1 only")
    profile = instance.profile
    forced = tuple(a for a in instance.targets if profile.opinion(a, a) == -1)
    if len(forced) > instance.ell:
        return None
    profile = apply_bribe(profile, forced)
    budget = instance.ell - len(forced)
    remaining = _unqualified_targets(profile, instance.targets, instance.s, 1)
    extra = _cover_missing_approvals(
        profile, remaining, instance.s, budget, set(forced), reduction_log=reduction_log
    )
    if extra is None:
        return None
    return tuple(sorted({*forced, *extra}))


def solve_bribery_general(instance: BriberyInstance) -> BribeSet | None:
    """Decide the bribery question for arbitrary consent thresholds."""
    return _branch_on_self_disapprovers(
        instance.profile,
        instance.targets,
        instance.s,
        instance.t,
        instance.ell,
        frozenset(),
    )


def _branch_on_self_disapprovers(
    profile: QualificationProfile,
    targets: tuple[int, ...],
    s: int,
    t: int,
    budget: int,
    bribed: frozenset[int],
) -> BribeSet | None:
    targets = _unqualified_targets(profile, targets, s, t)
    # forced stage: rescuing this target without bribing it would take more
    # bribes inside its disapprover set than the whole remaining budget
    while True:
        forced = next(
            (
                a
                for a in targets
                if profile.opinion(a, a) == -1
                and len(disqualifiers(profile, a)) >= budget + t
            ),
            None,
        )
        if forced is None:
            break
        budget -= 1
        if budget < 0:
            return None
        profile = apply_bribe(profile, (forced,))
        bribed = bribed | {forced}
        targets = _unqualified_targets(profile, targets, s, t)
    stubborn = [a for a in targets if profile.opinion(a, a) == -1]
    if stubborn:
        if budget == 0:
            return None  # any further bribe would overdraw
        a = min(stubborn)
        for b in sorted({a} | set(disqualifiers(profile, a))):
            got = _branch_on_self_disapprovers(
                apply_bribe(profile, (b,)), targets, s, t, budget - 1, bribed | {b}
            )
            if got is not None:
                return got
        return None
    extra = _cover_missing_approvals(profile, targets, s, budget, set(bribed))
    if extra is None:
        return None
    return tuple(sorted(bribed | set(extra)))


def brute_bribery(instance: BriberyInstance) -> BribeSet | None:
    """First working bribe set by size, then lexicographic order, or None."""
    n = instance.profile.n
    top = min(instance.ell, n)
    total = sum(comb(n, size) for size in range(top + 1))
    if total > BRIBERY_ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"{total} candidate bribe sets exceed the limit of {BRIBERY_ENUMERATION_LIMIT}"
        )
    wanted = set(instance.targets)
    for size in range(top + 1):
        for bribes in combinations(range(1, n + 1), size):
            after = apply_bribe(instance.profile, bribes)
            if wanted <= socially_qualified(after, instance.s, instance.t):
                return bribes
    return None
