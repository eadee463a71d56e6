"""The verification harness itself: registry dispatch, negative
controls, report determinism, caching, and report emission."""

import json

import pytest

from superyangian import AlgebraContext
from superyangian.cache import ENGINE_VERSION, ResultCache
from superyangian.report import emit
from superyangian.verify import (
    IDENTITIES,
    MutatedContext,
    Workspace,
    run_suite,
    verify_central,
    verify_drinfeld_presentation,
    verify_graded,
    verify_identity,
    verify_identity_registry,
    verify_independence,
    verify_rtt_consistency,
)


def test_registry_is_complete():
    ids = set(IDENTITIES)
    assert {f"Y21-{k}" for k in range(1, 14)} <= ids
    assert {f"Ymn-{k}" for k in range(1, 16)} <= ids
    assert {f"useful1-{k}" for k in range(1, 5)} <= ids
    assert {f"useful2-{k}" for k in (111, 222, 333, 444, 555)} <= ids
    assert {f"cyclic-{k}" for k in range(1, 5)} <= ids
    assert {f"ed-{k}" for k in range(1, 5)} <= ids
    assert {f"heb-{k}" for k in range(1, 7)} <= ids
    assert {"heb-comm", "coro1", "coro2", "coro3"} <= ids


def test_registry_passes_on_small_contexts(ws_factory):
    for (m, n, p) in [(1, 1, 3), (2, 1, 2)]:
        ws = ws_factory(m, n, p, 4)
        reports = verify_identity_registry(ws.ctx, bound=3)
        bad = [r.to_dict() for r in reports if r.status == "fail"]
        assert not bad, bad


def test_shape_specific_identities_skip_elsewhere(ws_factory):
    # the (2|1)-catalog identities only apply on that shape
    assert verify_identity("Y21-1", ws_factory(1, 1, 3, 4).ctx, 3).status == "skip"
    assert verify_identity("Y21-1", ws_factory(2, 1, 3, 4).ctx, 3).status == "pass"
    # and the half-shifted statements skip at p = 2
    assert verify_identity("coro2", ws_factory(1, 1, 2, 4).ctx, 3).status == "skip"


def test_unknown_identity_raises(ctx_small):
    with pytest.raises(KeyError):
        verify_identity("no-such-identity", ctx_small, 3)


def test_printed_he_bracket_fails_at_the_odd_root(ws_factory):
    # at i = m, p > 2 the bracket [h_m(u), e_m(v)] vanishes identically,
    # so a right side of the form -2 h_m(u) e_m(v) + ... cannot hold:
    # its leading coefficient -2 e_m^{(1)} is nonzero.  This is the
    # independent evidence behind the corrected i = m branch of heb-1/2.
    ws = ws_factory(1, 1, 3, 4)
    m = ws.ctx.m
    h1 = ws.h(m)[1]
    e1 = ws.e(m)[1]
    assert h1.supercommutator(e1) == ws.ctx.zero()
    assert e1.scale(-2) != ws.ctx.zero()


def test_reports_are_deterministic(ws_factory):
    ws = ws_factory(1, 1, 3, 4)
    a = [r.to_dict() for r in verify_identity_registry(ws.ctx, 3)]
    b = [r.to_dict() for r in verify_identity_registry(ws.ctx, 3)]
    for d in a + b:
        d.pop("millis")
    assert a == b


# -- negative controls --------------------------------------------------------


def test_mutated_algebra_fails_rtt():
    bad = MutatedContext(1, 1, 3, 4)
    rep = verify_rtt_consistency(bad, bound_degree=3, pair_bound=4)
    assert rep.status == "fail"
    assert rep.witness["diff"] != "0"


def test_mutated_algebra_fails_drinfeld():
    bad = MutatedContext(1, 1, 3, 4)
    rep = verify_drinfeld_presentation(bad, bound=3)
    assert rep.status == "fail"


def test_central_negative_control(ctx_small):
    rep = verify_central(ctx_small.generator(1, 1, 1), ctx_small)
    assert rep.status == "fail"
    assert rep.witness == {"where": "central", "indices": [1, 2, 1],
                           "diff": "t[1,2;1]"}


def test_graded_negative_control(ws_factory):
    ws = ws_factory(1, 1, 3, 4)
    c1 = ws.catalog["c"].series[1]
    from superyangian.current import z_element
    wrong = z_element(ws.cur, 0).scale(2)
    rep = verify_graded(c1, 0, wrong, ws.cur)
    assert rep.status == "fail"


def test_independence_negative_control(ws_factory):
    ws = ws_factory(1, 1, 3, 6)
    c = ws.catalog["c"].series
    gens = [c[1], c[1].scale(2)]
    rep = verify_independence(gens, ws.ctx, D=2)
    assert rep.status == "fail"
    assert rep.witness["where"] == "dependence"


def test_unknown_suite_raises(ctx_small):
    with pytest.raises(ValueError):
        run_suite(ctx_small, "bogus")


# -- cache --------------------------------------------------------------------


def test_cache_roundtrip(tmp_path):
    cache = ResultCache(tmp_path)
    payload = {"x": [1, 2, 3]}
    cache.put(1, 1, 3, 4, "thing", payload)
    assert cache.get(1, 1, 3, 4, "thing") == payload
    # distinct truncation order is a distinct key
    assert cache.get(1, 1, 3, 5, "thing") is None
    calls = []
    got = cache.get_or_compute(1, 1, 3, 4, "thing",
                               lambda: calls.append(1) or {})
    assert got == payload and not calls


def test_cache_corruption_is_a_miss(tmp_path):
    cache = ResultCache(tmp_path)
    cache.put(1, 1, 3, 4, "thing", {"x": 1})
    path = cache._path(1, 1, 3, 4, "thing")
    # flip the payload without updating the checksum
    entry = json.loads(path.read_text())
    entry["payload"] = {"x": 2}
    path.write_text(json.dumps(entry))
    assert cache.get(1, 1, 3, 4, "thing") is None
    path.write_text("not json")
    assert cache.get(1, 1, 3, 4, "thing") is None


def test_cache_version_mismatch_is_a_miss(tmp_path):
    cache = ResultCache(tmp_path)
    cache.put(1, 1, 3, 4, "thing", {"x": 1})
    path = cache._path(1, 1, 3, 4, "thing")
    entry = json.loads(path.read_text())
    entry["engine"] = ENGINE_VERSION + 1
    path.write_text(json.dumps(entry))
    assert cache.get(1, 1, 3, 4, "thing") is None


# -- report emission ----------------------------------------------------------


def test_emit_writes_json_csv_and_figure(tmp_path, ctx_small):
    reports = run_suite(ctx_small, "rtt")
    reports += [verify_central(ctx_small.generator(1, 1, 1), ctx_small)]
    out = tmp_path / "report.json"
    summary = emit(reports, out)
    assert out.exists()
    data = json.loads(out.read_text())
    assert {d["id"] for d in data} == {"rtt-consistency", "central"}
    csv_path = out.with_suffix(".csv")
    png_path = out.with_suffix(".png")
    assert csv_path.exists() and csv_path.stat().st_size > 0
    assert png_path.exists() and png_path.stat().st_size > 0
    assert summary["counts"]["fail"] == 1
    assert summary["counts"]["pass"] == 1


# -- CLI ----------------------------------------------------------------------


def test_cli_verify_exit_codes(tmp_path):
    from superyangian.cli import main
    out = tmp_path / "rep.json"
    code = main(["verify", "--m", "1", "--n", "1", "--p", "3",
                 "--trunc", "4", "--suite", "rtt", "--suite", "Ymn-3",
                 "--cache-dir", str(tmp_path / "cache"),
                 "--output", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert all(d["status"] == "pass" for d in data)


def test_cli_rejects_composite_characteristic(capsys):
    from superyangian.cli import main
    assert main(["verify", "--p", "4"]) == 2
    assert "prime" in capsys.readouterr().err


def test_cli_rejects_unknown_suite():
    from superyangian.cli import main
    assert main(["verify", "--suite", "bogus", "--trunc", "4"]) == 2


def test_cli_config_file(tmp_path):
    from superyangian.cli import main
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"m": 1, "n": 1, "p": 3, "trunc": 4,
                               "suite": ["rtt"]}))
    assert main(["verify", "--config", str(cfg)]) == 0
    cfg.write_text(json.dumps({"bogus-key": 1}))
    assert main(["verify", "--config", str(cfg)]) == 2


def test_cli_center_payload(tmp_path, capsys):
    from superyangian.cli import main
    assert main(["center", "--m", "1", "--n", "1", "--p", "3",
                 "--trunc", "4", "--set", "hc"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert sorted(payload) == [f"c^({r})" for r in range(1, 5)]
