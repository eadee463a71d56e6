"""Acceptance gate: the eleven end-to-end criteria, each an exact
equality check over F_p (tolerance zero) with an explicit runtime
budget.  A failure here means the engine disagrees with a stated
property on at least one coefficient."""

import time

import pytest

from superyangian import AlgebraContext, CurrentContext
from superyangian.central import (
    a_series,
    a_series_b_form,
    b_series,
    bc_from_c,
    bc_series,
    berezinian,
    berezinian_rtt,
    build_catalog,
    enumerate_generators,
    falling_product,
    p_series,
    s_series,
)
from superyangian.verify import (
    MutatedContext,
    Workspace,
    verify_central,
    verify_central_catalog,
    verify_drinfeld_presentation,
    verify_graded,
    verify_graded_catalog,
    verify_identity_registry,
    verify_independence,
    verify_maps,
    verify_pbw_counts,
    verify_rtt_consistency,
    verify_sy_presentation,
)

from conftest import ACCEPTANCE_CONTEXTS, REFERENCE_CONTEXTS, workspace

P3_CONTEXTS = [(1, 1, 3, 6), (2, 1, 3, 6), (1, 2, 3, 6)]


def assert_all_pass(reports, budget, start):
    elapsed = time.monotonic() - start
    bad = [r.to_dict() for r in reports if r.status == "fail"]
    assert not bad, bad
    assert elapsed < budget, f"budget exceeded: {elapsed:.1f}s > {budget}s"


# 1. RTT consistency ----------------------------------------------------------


@pytest.mark.parametrize("m,n,p,N", ACCEPTANCE_CONTEXTS)
def test_criterion_1_rtt_consistency(m, n, p, N):
    start = time.monotonic()
    ctx = workspace(m, n, p, N).ctx
    rep = verify_rtt_consistency(ctx, bound_degree=4, pair_bound=5)
    assert_all_pass([rep], budget=120, start=start)


# 2. Drinfeld presentation ----------------------------------------------------


@pytest.mark.parametrize("m,n,p,N", ACCEPTANCE_CONTEXTS)
def test_criterion_2_drinfeld_presentation(m, n, p, N):
    # all relations with r + s <= 5 (cubic r + s + t <= 5; the quartic
    # in superscript-1 coefficients), including the p = 2 context
    start = time.monotonic()
    ctx = workspace(m, n, p, N).ctx
    rep = verify_drinfeld_presentation(ctx, bound=5)
    assert_all_pass([rep], budget=600, start=start)
    # the h/e/f and kappa/xi forms of the same presentation
    rep2 = verify_sy_presentation(ctx, bound=5)
    assert rep2.status == "pass", rep2.to_dict()


# 3. Centrality, exact --------------------------------------------------------


@pytest.mark.parametrize("m,n,p,N", P3_CONTEXTS)
def test_criterion_3_centrality(m, n, p, N):
    ws = workspace(m, n, p, N)
    ctx, gd = ws.ctx, ws.gd
    s_max = min(N, 4)
    elements = []
    c = berezinian(gd)
    for r in range(1, N + 1):
        elements.append((f"c^({r})", c[r]))
    for i in range(1, ctx.size + 1):
        b = b_series(gd, i)
        elements.append((f"b_{i}^({p})", b[p]))
        elements.append((f"b_{i}^({2 * p})", b[2 * p]))
    from superyangian.central import even_pairs
    for (i, j) in even_pairs(ctx):
        for r in (1, 2):
            elements.append((f"(e^({r}))^p", gd.e[(i, j)][r] ** p))
            elements.append((f"(f^({r}))^p", gd.f[(j, i)][r] ** p))
    for i in range(1, ctx.size):
        elements.append((f"a_{i}^({p})", a_series(gd, i)[p]))
    for (i, j) in even_pairs(ctx, off_diagonal=False):
        elements.append((f"s_({i},{j})^({p})", s_series(gd, i, j)[p]))
    for name, el in elements:
        rep = verify_central(el, ctx, s_max=s_max, id=name)
        assert rep.status == "pass", rep.to_dict()


# 4. Vanishing ----------------------------------------------------------------


@pytest.mark.parametrize("m,n,p,N", P3_CONTEXTS + [(2, 1, 2, 4)])
def test_criterion_4_vanishing(m, n, p, N):
    ws = workspace(m, n, p, N)
    gd, ctx = ws.gd, ws.ctx
    from superyangian.central import even_pairs
    for r in range(1, p):
        for i in range(1, ctx.size + 1):
            assert not b_series(gd, i)[r], (m, n, "b", i, r)
        for (i, j) in even_pairs(ctx, off_diagonal=False):
            assert not s_series(gd, i, j)[r], (m, n, "s", i, j, r)
        assert not bc_series(gd)[r], (m, n, "bc", r)


# 5. Series identities at N = 2p ----------------------------------------------


@pytest.mark.parametrize("m,n,p,N", P3_CONTEXTS)
def test_criterion_5_series_identities(m, n, p, N):
    assert N == 2 * p
    ws = workspace(m, n, p, N)
    gd, ctx = ws.gd, ws.ctx
    assert bc_series(gd) == bc_from_c(gd)
    for i in range(1, ctx.size):
        assert a_series(gd, i) == a_series_b_form(gd, i)
        assert a_series(gd, i) == falling_product(gd.h[i], p)
    assert berezinian_rtt(ctx, gd) == berezinian(gd)
    if (m, n) == (2, 1):
        assert s_series(gd, 1, 1) == b_series(gd, 1)
        assert s_series(gd, 1, 2) == b_series(gd, 1) * p_series(gd, 1, 2)


# 6. Graded-image formulas ----------------------------------------------------


@pytest.mark.parametrize("m,n,p,N", P3_CONTEXTS)
def test_criterion_6_graded_images(m, n, p, N):
    start = time.monotonic()
    reports = verify_graded_catalog(workspace(m, n, p, N).ctx)
    assert_all_pass(reports, budget=300, start=start)


# 7. Map identities to order 4 ------------------------------------------------


@pytest.mark.parametrize("m,n,p,N", [(1, 1, 3, 6), (2, 1, 3, 5),
                                     (1, 2, 3, 5)])
def test_criterion_7_maps(m, n, p, N):
    start = time.monotonic()
    reports = verify_maps(workspace(m, n, p, N).ctx, bound=4)
    assert_all_pass(reports, budget=300, start=start)


def test_criterion_7_permutation_images():
    # transposition (2 3) on the (3,1) shape maps the simple root
    # series to the composite one (p = 3)
    from superyangian.gauss import gauss_decompose
    from superyangian.maps import permutation
    ctx = AlgebraContext(3, 1, 3, 4)
    gd = gauss_decompose(ctx)
    pm = permutation(ctx, [1, 3, 2, 4])
    assert pm.apply_series(gd.e_simple(1)) == gd.e[(1, 3)]
    assert pm.apply_series(gd.f_simple(1)) == gd.f[(3, 1)]


# 8. Identity registry --------------------------------------------------------


def test_criterion_8_identity_registry():
    start = time.monotonic()
    reports = []
    for (m, n, p, N) in REFERENCE_CONTEXTS:
        reports.extend(verify_identity_registry(workspace(m, n, p, N).ctx,
                                                bound=5))
    assert_all_pass(reports, budget=1800, start=start)
    # every registered identity ran (not merely skipped) somewhere
    ran = {r.id for r in reports if r.status == "pass"}
    from superyangian.verify import IDENTITIES
    assert ran == set(IDENTITIES)


# 9. Current superalgebra -----------------------------------------------------


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
def test_criterion_9_current(m, n):
    from superyangian.verify import verify_current
    start = time.monotonic()
    cur = CurrentContext(m, n, 3, 4)
    reports = verify_current(cur, d_max=3, inv_loop_max=2)
    assert_all_pass(reports, budget=300, start=start)


# 10. Bounded PBW / freeness --------------------------------------------------


@pytest.mark.parametrize("m,n,p,N", [(1, 1, 3, 6), (2, 1, 3, 5)])
def test_criterion_10_pbw(m, n, p, N):
    start = time.monotonic()
    ws = workspace(m, n, p, N)
    reports = [verify_pbw_counts(ws.ctx, D=2, max_len=2)]
    for which in ("hc", "p_center_Y", "full_center"):
        gens = [el for _, el in enumerate_generators(ws.ctx, which, ws.gd)]
        D = 2 * p if which != "hc" else 2
        reports.append(verify_independence(gens, ws.ctx, D, max_len=2,
                                           id=f"independence:{which}"))
    assert_all_pass(reports, budget=600, start=start)


# 11. Negative controls -------------------------------------------------------


def test_criterion_11_negative_controls():
    bad = MutatedContext(1, 1, 3, 4)
    assert verify_rtt_consistency(bad, 3, 4).status == "fail"
    assert verify_drinfeld_presentation(bad, 3).status == "fail"

    ctx = workspace(1, 1, 3, 4).ctx
    rep = verify_central(ctx.generator(1, 1, 1), ctx)
    assert rep.status == "fail"
    assert rep.witness["diff"] == "t[1,2;1]"

    ws = workspace(1, 1, 3, 6)
    from superyangian.current import z_element
    rep = verify_graded(ws.catalog["c"].series[1], 0,
                        z_element(ws.cur, 0).scale(2), ws.cur)
    assert rep.status == "fail"
    c1 = ws.catalog["c"].series[1]
    rep = verify_independence([c1, c1.scale(2)], ws.ctx, D=2)
    assert rep.status == "fail"
