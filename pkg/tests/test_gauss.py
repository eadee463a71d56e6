"""Gauss decomposition of T(u): reassembly, inversion, quasideterminant
oracles, composite roots, and the Cartan-type series conventions."""

import pytest

from superyangian import AlgebraContext, USeries
from superyangian.gauss import (
    cartan_entry,
    composite_root_series,
    e_quasidet,
    f_quasidet,
    identity_matrix,
    kappa_xi,
    leading_minor_quasidet,
    matrix_mul,
    t_matrix,
    t_series,
)

SHAPES = [(1, 1), (2, 1), (1, 2)]


@pytest.mark.parametrize("m,n", SHAPES)
def test_reassembly(ws_factory, m, n):
    # T(u) = F(u) D(u) E(u), entry by entry
    ws = ws_factory(m, n, 3, 4)
    gd, ctx = ws.gd, ws.ctx
    prod = matrix_mul(matrix_mul(gd.f_matrix(), gd.d_matrix()), gd.e_matrix())
    for i in range(1, ctx.size + 1):
        for j in range(1, ctx.size + 1):
            assert prod[i][j] == t_series(ctx, i, j)


@pytest.mark.parametrize("m,n", SHAPES)
def test_t_prime_is_inverse(ws_factory, m, n):
    ws = ws_factory(m, n, 3, 4)
    gd, ctx = ws.gd, ws.ctx
    keys = range(1, ctx.size + 1)
    assert matrix_mul(t_matrix(ctx), gd.t_prime()) == identity_matrix(ctx, keys)
    assert matrix_mul(gd.t_prime(), t_matrix(ctx)) == identity_matrix(ctx, keys)


def test_t_prime_first_coefficient(ws_factory):
    # T(u) = 1 + O(u^-1) forces t'_{i,j}^{(1)} = -t_{i,j}^{(1)}
    ws = ws_factory(2, 1, 3, 4)
    tp = ws.gd.t_prime()
    for i in range(1, 4):
        for j in range(1, 4):
            assert tp[i][j][1] == -ws.ctx.generator(i, j, 1)


@pytest.mark.parametrize("m,n", SHAPES)
def test_quasideterminant_oracles(ws_factory, m, n):
    # the boxed quasideterminants reproduce every Gauss series
    ws = ws_factory(m, n, 3, 4)
    gd, ctx = ws.gd, ws.ctx
    for k in range(1, ctx.size + 1):
        assert leading_minor_quasidet(ctx, k) == gd.d[k]
    for (i, j) in gd.e:
        assert e_quasidet(ctx, gd, i, j) == gd.e[(i, j)]
    for (j, i) in gd.f:
        assert f_quasidet(ctx, gd, j, i) == gd.f[(j, i)]


def test_composite_root_recursion(ws_factory):
    ws = ws_factory(2, 1, 3, 4)
    e13, f31 = composite_root_series(ws.gd, 1, 3)
    assert e13 == ws.gd.e[(1, 3)]
    assert f31 == ws.gd.f[(3, 1)]


@pytest.mark.parametrize("m,n", SHAPES)
def test_h_constant_term(ws_factory, m, n):
    ws = ws_factory(m, n, 3, 4)
    for i in range(1, ws.ctx.size):
        assert ws.h(i)[0] == ws.ctx.scalar(-ws.sign(i))


def test_frozen_first_coefficients(ws_factory):
    # on the (1,1) shape: d_1(u) = t_{1,1}(u) and e(u) = d_1(u)^{-1} t_{1,2}(u)
    ws = ws_factory(1, 1, 3, 4)
    assert ws.gd.e[(1, 2)][1].serialize() == [[[[1, 2, 1, 1]], 1]]
    assert ws.gd.f[(2, 1)][1].serialize() == [[[[2, 1, 1, 1]], 1]]
    assert ws.d(1) == t_series(ws.ctx, 1, 1)


def test_cartan_matrix_frozen():
    # hand values reduced mod 3: (2,1) has the odd root at i = 2
    c21 = AlgebraContext(2, 1, 3, 4)
    assert [[cartan_entry(c21, i, j) for j in (1, 2)] for i in (1, 2)] == \
        [[2, 2], [2, 0]]
    c12 = AlgebraContext(1, 2, 3, 4)
    assert [[cartan_entry(c12, i, j) for j in (1, 2)] for i in (1, 2)] == \
        [[0, 1], [1, 1]]


def test_kappa_constant_term_vanishes(ws_factory):
    ws = ws_factory(2, 1, 3, 4)
    for i in (1, 2):
        kappa, xi_p, xi_m = kappa_xi(ws.gd, i)
        assert kappa[0] == ws.ctx.zero()
        assert xi_p[0] == ws.ctx.zero()
        assert xi_m[0] == ws.ctx.zero()


def test_kappa_xi_requires_odd_p(ws_factory):
    ws = ws_factory(1, 1, 2, 4)
    with pytest.raises(ValueError):
        kappa_xi(ws.gd, 1)
