"""Command-line driver: context configuration, command dispatch
(gauss / berezinian / center / maps / verify / gr), result caching,
optional parallel suite execution, and report emission.

Exit codes: 0 all checks pass, 1 any check failed, 2 configuration
error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from . import report as report_mod
from . import verify as verify_mod
from .cache import ResultCache
from .central import berezinian, enumerate_generators
from .core import AlgebraContext
from .gauss import gauss_decompose
from .pbw import is_prime


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superyangian",
        description="exact computation and verification for the super "
                    "Yangian over F_p")
    parser.add_argument("command",
                        choices=["gauss", "berezinian", "center", "maps",
                                 "verify", "gr"])
    parser.add_argument("--m", type=int, default=1)
    parser.add_argument("--n", type=int, default=1)
    parser.add_argument("--p", type=int, default=3)
    parser.add_argument("--trunc", type=int, default=6,
                        help="truncation order N")
    parser.add_argument("--suite", action="append", default=None,
                        help="suite or identity id for `verify` "
                             "(repeatable; default: all)")
    parser.add_argument("--bound", type=int, default=None,
                        help="superscript bound override")
    parser.add_argument("--set", dest="gen_set", default="full_center",
                        choices=["hc", "p_center_Y", "p_center_SY",
                                 "full_center"],
                        help="generator set for `center`")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument("--output", default=None,
                        help="report path (JSON; CSV and PNG siblings "
                             "are written next to it)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the randomized round-trip spot check")
    parser.add_argument("--config", default=None,
                        help="JSON config file; keys mirror the flags")
    return parser


def _load_config(args) -> argparse.Namespace:
    if args.config:
        with open(args.config) as fh:
            for key, value in json.load(fh).items():
                key = key.replace("-", "_")
                if not hasattr(args, key):
                    raise ValueError(f"unknown config key {key!r}")
                setattr(args, key, value)
    return args


def _make_context(args) -> AlgebraContext:
    if not is_prime(args.p):
        raise ValueError(f"p must be prime, got {args.p}")
    return AlgebraContext(args.m, args.n, args.p, args.trunc)


def _roundtrip_spot_check(ctx: AlgebraContext, seed: int):
    rng = random.Random(seed)
    for _ in range(5):
        el = ctx.zero()
        for _ in range(rng.randrange(1, 4)):
            i = rng.randrange(1, ctx.size + 1)
            j = rng.randrange(1, ctx.size + 1)
            r = rng.randrange(1, ctx.N + 1)
            el = el + ctx.generator(i, j, r).scale(rng.randrange(1, ctx.p))
        if ctx.deserialize(el.serialize()) != el:
            raise AssertionError("serialization round-trip failed")


def _cached_series(cache, ctx, name, compute):
    if cache is None:
        return compute()
    return cache.get_or_compute(ctx.m, ctx.n, ctx.p, ctx.N, name, compute)


def _cmd_gauss(ctx, cache):
    gd = gauss_decompose(ctx)

    def payload():
        out = {"d": {}, "e": {}, "f": {}}
        for i in range(1, ctx.size + 1):
            out["d"][str(i)] = gd.d[i].serialize()
        for (i, j), s in gd.e.items():
            out["e"][f"{i},{j}"] = s.serialize()
        for (j, i), s in gd.f.items():
            out["f"][f"{j},{i}"] = s.serialize()
        return out

    return _cached_series(cache, ctx, "gauss", payload), []


def _cmd_berezinian(ctx, cache):
    def payload():
        c = berezinian(gauss_decompose(ctx))
        return {"c": c.serialize()}

    return _cached_series(cache, ctx, "berezinian", payload), []


def _cmd_center(ctx, cache, gen_set):
    def payload():
        gens = enumerate_generators(ctx, gen_set)
        return {name: el.serialize() for name, el in gens}

    return _cached_series(cache, ctx, f"center:{gen_set}", payload), []


def _cmd_maps(ctx, bound):
    reports = verify_mod.verify_maps(ctx, bound or 4)
    return None, reports


def _cmd_gr(ctx):
    reports = verify_mod.verify_graded_catalog(ctx)
    return None, reports


def _cmd_verify(ctx, suites, bound, jobs):
    suites = suites or ["all"]
    names = []
    for s in suites:
        if s == "all":
            names.extend(verify_mod.SUITES)
        elif s in verify_mod.SUITES:
            names.append(s)
        elif s in verify_mod.IDENTITIES:
            names.append(s)
        else:
            raise ValueError(f"unknown suite or identity {s!r}")

    def run(name):
        if name in verify_mod.IDENTITIES:
            return [verify_mod.verify_identity(name, ctx, bound)]
        return verify_mod.run_suite(ctx, name, bound)

    reports = []
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(run, names):
                reports.extend(chunk)
    else:
        for name in names:
            reports.extend(run(name))
    reports.sort(key=lambda r: r.id)
    return None, reports


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args = _load_config(args)
        ctx = _make_context(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    cache = ResultCache(args.cache_dir) if args.cache_dir else None
    _roundtrip_spot_check(ctx, args.seed)

    try:
        if args.command == "gauss":
            payload, reports = _cmd_gauss(ctx, cache)
        elif args.command == "berezinian":
            payload, reports = _cmd_berezinian(ctx, cache)
        elif args.command == "center":
            payload, reports = _cmd_center(ctx, cache, args.gen_set)
        elif args.command == "maps":
            payload, reports = _cmd_maps(ctx, args.bound)
        elif args.command == "gr":
            payload, reports = _cmd_gr(ctx)
        else:
            payload, reports = _cmd_verify(ctx, args.suite, args.bound,
                                           args.jobs)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if payload is not None:
        text = json.dumps(payload, indent=2, sort_keys=True)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return 0

    if args.output:
        summary = report_mod.emit(reports, args.output)
        print(json.dumps(summary, indent=2, sort_keys=True))
    else:
        print(json.dumps([r.to_dict() for r in reports], indent=2,
                         sort_keys=True))
    return 1 if any(r.status == "fail" for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
