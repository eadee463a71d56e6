"""Truncated power-series arithmetic: binomials mod p, inverses,
argument shifts, and the bivariate (u, v) layer."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superyangian import AlgebraContext, USeries, UVSeries
from superyangian.series import binomial_mod_p, divided_difference


@pytest.fixture(scope="module")
def ctx():
    return AlgebraContext(1, 1, 3, 5)


def sample_series(ctx, triples):
    """Unital series 1 + sum of the given generators at their orders."""
    coeffs = [ctx.one()] + [ctx.zero()] * ctx.N
    for order, (i, j, r) in triples:
        coeffs[order] = coeffs[order] + ctx.generator(i, j, r)
    return USeries(ctx, coeffs)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 400), st.integers(0, 400),
       st.sampled_from([2, 3, 5, 7]))
def test_binomial_lucas_matches_comb(n, k, p):
    assert binomial_mod_p(n, k, p) == math.comb(n, k) % p


def test_getitem_bounds(ctx):
    g = USeries.constant(ctx, 1)
    with pytest.raises(IndexError):
        g[ctx.N + 1]
    with pytest.raises(IndexError):
        g[-1]


def test_inverse_two_sided(ctx):
    g = sample_series(ctx, [(1, (1, 1, 1)), (2, (1, 2, 2)), (3, (2, 1, 1))])
    one = USeries.constant(ctx, 1)
    assert g * g.inverse() == one
    assert g.inverse() * g == one


def test_inverse_requires_unital(ctx):
    g = USeries(ctx, [ctx.zero(), ctx.one()])
    with pytest.raises(ValueError):
        g.inverse()


def test_shift_composes(ctx):
    g = sample_series(ctx, [(1, (1, 1, 1)), (3, (2, 2, 2))])
    assert g.shift(0) == g
    assert g.shift(1).shift(2) == g.shift(3)
    assert g.shift(1).shift(-1) == g


def test_shift_is_multiplicative(ctx):
    f = sample_series(ctx, [(1, (1, 2, 1))])
    g = sample_series(ctx, [(1, (2, 1, 1)), (2, (1, 1, 2))])
    assert (f * g).shift(2) == f.shift(2) * g.shift(2)


def test_shift_scalar_oracle(ctx):
    # (u - c)^{-1} = sum_k c^k u^{-k-1}, checked against the closed form
    g = USeries(ctx, [ctx.zero(), ctx.one()])
    shifted = g.shift(2)
    for r in range(1, ctx.N + 1):
        assert shifted[r] == ctx.scalar(pow(2, r - 1, ctx.p))


def test_pow_p_scalar_frobenius(ctx):
    # (1 + a u^{-1})^p = 1 + a^p u^{-p} for scalar a in characteristic p
    a = 2
    g = USeries(ctx, [ctx.one(), ctx.scalar(a)])
    expect = [ctx.one()] + [ctx.zero()] * ctx.N
    expect[ctx.p] = ctx.scalar(pow(a, ctx.p, ctx.p))
    assert g.pow_p() == USeries(ctx, expect)


def test_uv_from_u_from_v(ctx):
    g = sample_series(ctx, [(1, (1, 1, 1))])
    F = UVSeries.from_u(g, 4)
    assert F[(1, 0)] == g[1]
    assert F[(0, 1)] == ctx.zero()
    assert UVSeries.from_v(g, 4)[(0, 1)] == g[1]
    with pytest.raises(IndexError):
        F[(3, 2)]


def test_uv_swap_involution(ctx):
    g = sample_series(ctx, [(1, (1, 2, 1)), (2, (2, 1, 2))])
    F = UVSeries.from_u(g, 4) * UVSeries.from_v(g, 4)
    assert F.swap_uv().swap_uv() == F


def test_times_u_minus_v_drops_one_order(ctx):
    F = UVSeries.from_u(sample_series(ctx, [(1, (1, 1, 1))]), 4)
    assert F.times_u_minus_v().order == 3


def test_divided_difference_oracle(ctx):
    # (u - v) * (g(v) - g(u))/(u - v) == g(v) - g(u), for g with no
    # constant term, to one order below the window
    g = USeries(ctx, [ctx.zero(), ctx.generator(1, 1, 1),
                      ctx.generator(1, 2, 2), ctx.generator(2, 1, 1),
                      ctx.generator(2, 2, 3), ctx.generator(1, 1, 4)])
    order = ctx.N
    lhs = divided_difference(g, order).times_u_minus_v()
    rhs = UVSeries.from_v(g, order - 1) - UVSeries.from_u(g, order - 1)
    assert lhs == rhs


def test_times_u_minus_v_with_shift(ctx):
    # the scalar c enters as -c times the identity on coefficients
    g = sample_series(ctx, [(1, (1, 1, 1))])
    F = UVSeries.from_u(g, 4)
    diff = F.times_u_minus_v(2) - (F.times_u_minus_v() - F.scale(2))
    assert diff == UVSeries(ctx, 3)
