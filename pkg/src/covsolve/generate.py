"""Seeded random instance generators.

Randomness comes from :class:`random.Random`, CPython's Mersenne Twister with
its version-3 seeding, so a given seed and parameter set yields the same
instance on every supported platform.  Draw order is fixed: set memberships
(sets in index order, elements in increasing order within each set), then
bounds, then prices and the price budget, then any sampling of target agents.
"""

from __future__ import annotations

import random

from .bribery import BriberyInstance, QualificationProfile
from .core import Mode, SetCoverInstance


def generate_setcover(
    seed: int,
    n: int,
    m: int,
    k: int,
    mode: Mode,
    density: float,
    *,
    multiplicities: bool = False,
    priced: bool = False,
    price_max: int = 5,
) -> SetCoverInstance:
    """Random instance: each element joins each set with probability ``density``.

    Bounds are uniform over ``0..m``; prices, when requested, are uniform
    over ``1..price_max`` with a budget uniform over ``0..price_max * max(k, 1)``.
    """
    if n < 1 or m < 1:
        raise ValueError("need at least one element and one set")
    if k < 0:
        raise ValueError("k must be non-negative")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    if price_max < 1:
        raise ValueError("price_max must be at least 1")
    rng = random.Random(seed)
    family = tuple(
        frozenset(i for i in range(1, n + 1) if rng.random() < density)
        for _ in range(m)
    )
    bounds = tuple(rng.randint(0, m) for _ in range(n))
    prices = None
    price_budget = None
    if priced:
        prices = tuple(rng.randint(1, price_max) for _ in range(m))
        price_budget = rng.randint(0, price_max * max(k, 1))
    return SetCoverInstance(
        n=n,
        family=family,
        mode=mode,
        bounds=bounds,
        k=k,
        prices=prices,
        price_budget=price_budget,
        multiplicities=multiplicities,
    )


def generate_bribery(
    seed: int,
    n: int,
    s: int,
    t: int,
    ell: int,
    target_count: int,
    positive_rate: float,
) -> BriberyInstance:
    """Random profile: each opinion is +1 with probability ``positive_rate``."""
    if n < 1:
        raise ValueError("need at least one agent")
    if not 0 <= target_count <= n:
        raise ValueError(f"target count must lie in 0..{n}")
    if not 0.0 <= positive_rate <= 1.0:
        raise ValueError("positive_rate must lie in [0, 1]")
    rng = random.Random(seed)
    rows = tuple(
        tuple(1 if rng.random() < positive_rate else -1 for _ in range(n))
        for _ in range(n)
    )
    targets = tuple(sorted(rng.sample(range(1, n + 1), target_count)))
    profile = QualificationProfile(n, rows)
    return BriberyInstance(profile=profile, targets=targets, s=s, t=t, ell=ell)
