from fractions import Fraction
from math import gcd

import pytest
from hypothesis import strategies as st

from kummer import CurveSpec


def brute_force_jump(spec, u, s):
    """Jump count from fractional parts ``{tau * lambda_i / m}``, i = 0..r.

    Exact fractions throughout, and ``t_u`` is found by scanning rather than
    by modular inversion, so no code is shared with the residue table.
    """
    m = spec.m
    lam_u = spec.lambdas[u]
    d = gcd(m, lam_u)
    mu, eta = m // d, lam_u // d
    t_u = next(t for t in range(mu) if (s + eta * t) % mu == 0)
    bound = 1 + (s - 1) // mu
    count = 0
    for j in range(d):
        tau = t_u + j * mu
        total = sum(Fraction((tau * lam) % m, m) for lam in spec.lambdas[: spec.r + 1])
        if total <= bound:
            count += 1
    return count


@st.composite
def curve_specs(draw, max_m=12, max_r=6, min_r=1):
    m = draw(st.integers(2, max_m))
    r = draw(st.integers(min_r, max_r))
    mults = draw(st.lists(st.integers(1, m - 1), min_size=r, max_size=r))
    g = m
    for lam in mults:
        g = gcd(g, lam)
    if g != 1:
        mults[0] = 1
    return CurveSpec(m, mults)


@pytest.fixture
def fermat5():
    return CurveSpec(5, (1, 1, 1, 1, 1))


@pytest.fixture
def hyper6():
    return CurveSpec(2, (1,) * 6)


@pytest.fixture
def elliptic():
    return CurveSpec(2, (1, 1, 1))


@pytest.fixture
def quartic():
    # y^4 = x (x-1) (x-a)^2
    return CurveSpec(4, (1, 1, 2))
