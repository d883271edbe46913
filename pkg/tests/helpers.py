"""Shared builders and hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from covsolve import Mode, QualificationProfile, SetCoverInstance


def cap(family, bounds, k, **kwargs):
    """Capacities instance with n inferred from the bounds."""
    return SetCoverInstance(
        n=len(bounds),
        family=tuple(frozenset(f) for f in family),
        mode=Mode.CAPACITIES,
        bounds=tuple(bounds),
        k=k,
        **kwargs,
    )


def dem(family, bounds, k, **kwargs):
    """Demands instance with n inferred from the bounds."""
    return SetCoverInstance(
        n=len(bounds),
        family=tuple(frozenset(f) for f in family),
        mode=Mode.DEMANDS,
        bounds=tuple(bounds),
        k=k,
        **kwargs,
    )


@st.composite
def instances(
    draw,
    max_n=4,
    max_m=4,
    max_k=3,
    modes=(Mode.DEMANDS, Mode.CAPACITIES),
    multiplicities=False,
    priced=False,
    bounds_within_k=False,
):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    k = draw(st.integers(0, max_k))
    family = tuple(
        frozenset(draw(st.sets(st.integers(1, n)))) for _ in range(m)
    )
    hi = k if bounds_within_k else m
    bounds = tuple(draw(st.integers(0, hi)) for _ in range(n))
    prices = None
    price_budget = None
    if priced:
        prices = tuple(draw(st.integers(1, 4)) for _ in range(m))
        price_budget = draw(st.integers(0, 4 * max(k, 1)))
    return SetCoverInstance(
        n=n,
        family=family,
        mode=draw(st.sampled_from(modes)),
        bounds=bounds,
        k=k,
        prices=prices,
        price_budget=price_budget,
        multiplicities=multiplicities,
    )


@st.composite
def profiles(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    rows = tuple(
        tuple(draw(st.sampled_from((-1, 1))) for _ in range(n)) for _ in range(n)
    )
    return QualificationProfile(n, rows)
