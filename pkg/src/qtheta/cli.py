"""qtheta command line: run verification suites and emit JSON reports.

    qtheta verify yangian --n 2 --node 1 --height 4
    qtheta verify theta-qaffine --depth 6 --degree-bound 14
    qtheta solve gklo --n 1 --order 2
    qtheta verify all --report out.json

Exit status is 0 when every check passes, 1 when a check fails and 2 on bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Dict, List, Optional

from .report import Check, SuiteResult

DEFAULTS = {"n": 2, "node": None, "height": 4, "depth": 8, "order": 10, "degree_bound": 12, "margin": 3}
VERIFY_SUITES = ("yangian", "prefund", "qaffine-roots", "theta-qaffine", "all")
SOLVE_SUITES = ("gklo", "s-series")


def load_config(path: str) -> Dict[str, int]:
    """key = value lines; '#' starts a comment; keys use underscores or dashes."""
    out: Dict[str, int] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in DEFAULTS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = int(value)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtheta", description="Exact verification suites for Theta series.")
    p.add_argument("action", choices=("verify", "solve"))
    p.add_argument("suite")
    p.add_argument("--n", type=int, help="rank (yangian, gklo, s-series)")
    p.add_argument("--node", type=int, help="single node i (yangian)")
    p.add_argument("--height", type=int, help="height truncation H (yangian)")
    p.add_argument("--depth", type=int, help="depth D (prefund, theta-qaffine)")
    p.add_argument("--order", type=int, help="series order M (gklo, s-series)")
    p.add_argument("--degree-bound", dest="degree_bound", type=int, help="ideal membership degree bound B")
    p.add_argument("--margin", type=int, help="interior margin for the truncated L_1 module")
    p.add_argument("--report", help="write the JSON report here instead of standard output")
    p.add_argument("--config", help="key = value file; flags override it")
    return p


def resolve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Dict[str, Optional[int]]:
    cfg: Dict[str, int] = {}
    if args.config:
        try:
            cfg = load_config(args.config)
        except (OSError, ValueError) as exc:
            parser.error(str(exc))
    params = {}
    for key, default in DEFAULTS.items():
        flag = getattr(args, key)
        params[key] = flag if flag is not None else cfg.get(key, default)
    for key, value in params.items():
        if value is not None and (value < 1 if key != "margin" else value < 0):
            parser.error(f"--{key.replace('_', '-')} must be positive")
    if args.action == "verify" and args.suite not in VERIFY_SUITES:
        parser.error(f"unknown verify suite {args.suite!r}; choose from {', '.join(VERIFY_SUITES)}")
    if args.action == "solve" and args.suite not in SOLVE_SUITES:
        parser.error(f"unknown solve suite {args.suite!r}; choose from {', '.join(SOLVE_SUITES)}")
    if params["node"] is not None and params["node"] > params["n"]:
        parser.error("--node must not exceed --n")
    if args.suite in ("prefund", "theta-qaffine", "all") and params["depth"] < 3:
        parser.error("--depth must be at least 3")
    return params


def _guard(name: str, params: dict, fn) -> SuiteResult:
    """Run a suite; rank or ansatz failures become a failing check instead of a traceback."""
    try:
        return fn()
    except (ArithmeticError, ValueError) as exc:
        res = SuiteResult(name, params)
        res.add(Check("suite completed", "fail", f"{type(exc).__name__}: {exc}", 1))
        return res


def run_named(action: str, suite: str, p: dict) -> SuiteResult:
    # imports are deferred so `qtheta --help` stays fast
    if action == "solve" and suite == "gklo":
        from .cartan_series import run_gklo_suite
        return _guard("solve-gklo", p, lambda: run_gklo_suite(p["n"], p["order"]))
    if action == "solve":
        from .cartan_series import run_s_series_suite
        return _guard("solve-s-series", p, lambda: run_s_series_suite(p["n"], p["order"]))
    if suite == "yangian":
        from .yangian import run_suite
        return _guard("yangian", p, lambda: run_suite(p["n"], p["node"], p["height"]))
    if suite == "prefund":
        from .prefund import run_suite
        return _guard("prefund", p, lambda: run_suite(p["depth"], p["margin"]))
    if suite == "qaffine-roots":
        from .qaffine import verify_root_vectors
        return _guard("qaffine-roots", p, lambda: verify_root_vectors(max(4, p["degree_bound"])))
    if suite == "theta-qaffine":
        from .rmatrix_theta import run_suite
        return _guard("theta-qaffine", p, lambda: run_suite(p["depth"], p["degree_bound"]))
    raise ValueError(suite)


def report_dict(res: SuiteResult, elapsed_ms: int) -> dict:
    return {
        "suite": res.suite,
        "params": res.params,
        "checks": [c.as_dict() for c in res.checks],
        "elapsed_ms": elapsed_ms,
    }


def run_all(p: dict) -> dict:
    subs: List[dict] = []
    plan = [("verify", "yangian"), ("verify", "prefund"), ("verify", "qaffine-roots"),
            ("verify", "theta-qaffine"), ("solve", "gklo"), ("solve", "s-series")]
    checks = []
    for action, suite in plan:
        t0 = time.perf_counter()
        res = run_named(action, suite, p)
        rep = report_dict(res, int((time.perf_counter() - t0) * 1000))
        subs.append(rep)
        checks.extend({**c, "name": f"{res.suite}: {c['name']}"} for c in rep["checks"])
    return {"suite": "all", "params": p, "checks": checks, "suites": subs}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params = resolve(args, parser)
    t0 = time.perf_counter()
    if args.suite == "all":
        rep = run_all(params)
    else:
        rep = report_dict(run_named(args.action, args.suite, params), 0)
    rep["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    text = json.dumps(rep, indent=2) + "\n"
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = [c for c in rep["checks"] if c["status"] != "pass"]
    for c in failed:
        print(f"FAIL {c['name']}", file=sys.stderr)
    return 1 if failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
