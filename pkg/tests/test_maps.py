"""Algebra maps: homomorphism checks plus the closed-form images of the
Gauss series under each map."""

import pytest

from superyangian import AlgebraContext, USeries
from superyangian.gauss import gauss_decompose
from superyangian.maps import (
    check_homomorphism,
    eta_c,
    identity_map,
    mu_f,
    omega,
    permutation,
    phi_k,
    psi_k,
    rho,
    zeta,
)


def hom_ok(amap, bound=3):
    ok, witnesses = check_homomorphism(amap, bound)
    assert ok, witnesses[0]


@pytest.mark.parametrize("mk", [
    lambda c: identity_map(c),
    lambda c: omega(c),
    lambda c: rho(c),
    lambda c: zeta(c),
    lambda c: phi_k(c, 1),
    lambda c: psi_k(c, 1),
    lambda c: mu_f(c, [1, 1, 2]),
    lambda c: eta_c(c, 1),
])
def test_homomorphism(ctx_21, mk):
    hom_ok(mk(ctx_21))


def test_omega_is_an_involution(ctx_21):
    om = omega(ctx_21)
    for i in range(1, 4):
        for j in range(1, 4):
            for r in (1, 2, 3):
                assert om.apply(om.image(i, j, r)) == ctx_21.generator(i, j, r)


def test_rho_images(ctx_21):
    r = rho(ctx_21)
    M = ctx_21.size
    assert r.target.m == ctx_21.n and r.target.n == ctx_21.m
    assert r.image(1, 2, 2) == r.target.generator(M, M - 1, 2)
    assert r.image(1, 2, 1) == -r.target.generator(M, M - 1, 1)


def test_zeta_images(ws_factory):
    # zeta: Y_{m|n} -> Y_{n|m} sends d_i(u) -> d_{M+1-i}(u)^{-1},
    # e_j(u) -> -f_{M-j}(u), f_j(u) -> -e_{M-j}(u)
    ws = ws_factory(2, 1, 3, 4)
    z = zeta(ws.ctx)
    tgt = gauss_decompose(z.target)
    M = ws.ctx.size
    for i in range(1, M + 1):
        assert z.apply_series(ws.d(i)) == tgt.dprime[M + 1 - i]
    for j in range(1, M):
        assert z.apply_series(ws.e(j)) == -tgt.f_simple(M - j)
        assert z.apply_series(ws.f(j)) == -tgt.e_simple(M - j)


def test_psi_shifts_drinfeld_series(ws_factory):
    # psi_k sends d_i -> d_{k+i}, e_i -> e_{k+i}, f_i -> f_{k+i}
    ws = ws_factory(2, 1, 3, 4)
    ps = psi_k(ws.ctx, 1)
    tgt = gauss_decompose(ps.target)
    M = ws.ctx.size
    for i in range(1, M + 1):
        assert ps.apply_series(ws.d(i)) == tgt.d[1 + i]
    for i in range(1, M):
        assert ps.apply_series(ws.e(i)) == tgt.e[(1 + i, 2 + i)]
        assert ps.apply_series(ws.f(i)) == tgt.f[(2 + i, 1 + i)]


def test_psi_image_supercommutes_with_corner(ws_factory):
    # the image of psi_1 supercommutes with the t_{1,1}^{(s)} corner
    ws = ws_factory(1, 1, 3, 4)
    ps = psi_k(ws.ctx, 1)
    tgt = ps.target
    for i in (1, 2):
        for j in (1, 2):
            for r in (1, 2):
                img = ps.image(i, j, r)
                for s in (1, 2, 3):
                    assert img.supercommutator(tgt.generator(1, 1, s)) == \
                        tgt.zero()


def test_mu_f_images(ws_factory):
    # mu_f multiplies d_i by f and fixes the root series
    ws = ws_factory(2, 1, 3, 4)
    coeffs = [1, 2, 1, 0, 0]
    mf = mu_f(ws.ctx, coeffs)
    fs = USeries(ws.ctx, [ws.ctx.scalar(c) for c in coeffs])
    tgt = gauss_decompose(ws.ctx)  # same context
    for i in range(1, 4):
        assert mf.apply_series(ws.d(i)) == fs * tgt.d[i]
    for i in range(1, 3):
        assert mf.apply_series(ws.e(i)) == tgt.e_simple(i)
        assert mf.apply_series(ws.f(i)) == tgt.f_simple(i)


def test_mu_f_requires_unital():
    ctx = AlgebraContext(1, 1, 3, 4)
    with pytest.raises(ValueError):
        mu_f(ctx, [0, 1])


def test_eta_c_translates_series(ws_factory):
    ws = ws_factory(2, 1, 3, 4)
    et = eta_c(ws.ctx, 2)
    for i in range(1, 4):
        assert et.apply_series(ws.d(i)) == ws.d(i).shift(2)
    for i in range(1, 3):
        assert et.apply_series(ws.e(i)) == ws.e(i).shift(2)


def test_block_permutation(ws_factory):
    ws = ws_factory(3, 1, 3, 4)
    pm = permutation(ws.ctx, [1, 3, 2, 4])
    hom_ok(pm)
    assert pm.image(1, 2, 1) == ws.ctx.generator(1, 3, 1)


def test_transposition_maps_simple_to_composite_root(ws_factory):
    # the transposition (i+1, j) sends e_i(u) to e_{i,j}(u) and
    # f_i(u) to f_{j,i}(u); here i = 1, j = 3 on the (3,1) shape
    ws = ws_factory(3, 1, 3, 4)
    pm = permutation(ws.ctx, [1, 3, 2, 4])
    assert pm.apply_series(ws.e(1)) == ws.gd.e[(1, 3)]
    assert pm.apply_series(ws.f(1)) == ws.gd.f[(3, 1)]


def test_wall_crossing_permutation_needs_p2(ws_factory):
    ctx = ws_factory(2, 1, 3, 4).ctx
    with pytest.raises(ValueError):
        permutation(ctx, [1, 3, 2])
    # at p = 2 the crossing is permitted and is an automorphism
    ctx2 = ws_factory(2, 1, 2, 4).ctx
    hom_ok(permutation(ctx2, [1, 3, 2]))


def test_non_permutation_rejected(ctx_21):
    with pytest.raises(ValueError):
        permutation(ctx_21, [1, 1, 2])


def test_composition_context_mismatch(ctx_21):
    with pytest.raises(ValueError):
        phi_k(ctx_21, 1).then(omega(ctx_21))
