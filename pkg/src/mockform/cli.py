"""Command line interface.

    mockform hurwitz --max 100 --format csv
    mockform eval --target H --tau 0,1.2
    mockform verify --suite all --format json

Exit codes: 0 success, 1 usage error, 2 check or convergence failure.
Tables and verification reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cache import CacheError, default_cache_path, load_or_build
from .class_numbers import build_table
from .config import DEFAULT_CONFIG
from .eisenstein import eisenstein_direct, eisenstein_fourier
from .maass import completed_hurwitz_series, e2_star, theta_series
from .verify import DEFAULT_SEED, SUITES, run_suite


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; this tool reserves 2 for
    # failed checks, so usage problems map to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mockform",
                     description="Hurwitz class numbers and the weight 3/2 "
                                 "mock modular form, numerically certified.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_h = sub.add_parser("hurwitz", help="tabulate Hurwitz class numbers")
    p_h.add_argument("--max", type=int, required=True, dest="max_n",
                     help="largest n in the table (n >= 0)")
    p_h.add_argument("--format", choices=("json", "csv"), default="csv")
    p_h.add_argument("--cache", default=None,
                     help="cache file (default: MOCKFORM_CACHE or ~/.cache/mockform)")
    p_h.add_argument("--no-cache", action="store_true", help="do not read or write a cache")
    p_h.add_argument("--rebuild-cache", action="store_true",
                     help="recompute the table even if a cache exists")

    p_e = sub.add_parser("eval", help="evaluate a series at a point")
    p_e.add_argument("--target", choices=("H", "theta", "e2star", "eisenstein"),
                     required=True)
    p_e.add_argument("--tau", required=True, help="point u,v with v > 0")
    p_e.add_argument("--k", type=int, default=2, help="integer k in weight k+1/2")
    p_e.add_argument("--s", type=float, default=1.0, help="nonholomorphic shift s")
    p_e.add_argument("--format", choices=("json", "text"), default="text")
    _add_config_flags(p_e)

    p_v = sub.add_parser("verify", help="run a verification suite")
    p_v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p_v.add_argument("--format", choices=("json", "text"), default="text")
    p_v.add_argument("--seed", type=int, default=DEFAULT_SEED,
                     help=f"PRNG seed for random-matrix checks (default {DEFAULT_SEED})")
    _add_config_flags(p_v)
    return parser


def _add_config_flags(p):
    p.add_argument("--lattice-bound", type=int, default=None)
    p.add_argument("--fourier-bound", type=int, default=None)
    p.add_argument("--q-terms", type=int, default=None)
    p.add_argument("--fd-step", type=float, default=None)
    p.add_argument("--quad-tol", type=float, default=None)


def _config_from(args):
    cfg = DEFAULT_CONFIG
    overrides = {}
    for flag, name in (("lattice_bound", "lattice_bound"),
                       ("fourier_bound", "fourier_bound"),
                       ("q_terms", "q_terms"),
                       ("fd_step", "fd_step"),
                       ("quad_tol", "quad_tol")):
        value = getattr(args, flag, None)
        if value is not None:
            overrides[name] = value
    return cfg.with_(**overrides) if overrides else cfg


def _parse_tau(text: str) -> complex:
    try:
        u_str, v_str = text.split(",")
        tau = complex(float(u_str), float(v_str))
    except ValueError:
        raise SystemExit(_fail(1, f"cannot parse --tau {text!r}; expected u,v"))
    if tau.imag <= 0:
        raise SystemExit(_fail(1, f"--tau needs v > 0, got {tau.imag}"))
    return tau


def _fail(code: int, message: str) -> int:
    print(f"mockform: {message}", file=sys.stderr)
    return code


def _cmd_hurwitz(args) -> int:
    if args.max_n < 0:
        return _fail(1, "--max must be >= 0")
    try:
        if args.no_cache:
            table = build_table(args.max_n)
        else:
            path = args.cache or default_cache_path()
            table = load_or_build(path, args.max_n, rebuild=args.rebuild_cache)
    except CacheError as exc:
        return _fail(2, str(exc))
    except ArithmeticError as exc:
        return _fail(2, str(exc))
    rows = [(n, table.value(n)) for n in range(args.max_n + 1)]
    if args.format == "csv":
        print("n,H(n)")
        for n, value in rows:
            print(f"{n},{value.numerator}/{value.denominator}")
    else:
        payload = {
            "command": "hurwitz",
            "params": {"max_n": args.max_n},
            "results": [{"n": n, "value": f"{v.numerator}/{v.denominator}"} for n, v in rows],
            "summary": {"entries": len(rows)},
        }
        print(json.dumps(payload, indent=2))
    return 0


def _cmd_eval(args) -> int:
    cfg = _config_from(args)
    tau = _parse_tau(args.tau)
    record: dict = {"target": args.target, "tau": [tau.real, tau.imag]}
    try:
        if args.target == "H":
            val = completed_hurwitz_series(tau, cfg)
            record.update(value=_c(val.value),
                          holomorphic_part=_c(val.holomorphic_part),
                          nonholomorphic_part=_c(val.nonholomorphic_part),
                          truncation_tail=val.truncation_tail)
        elif args.target == "theta":
            record.update(value=_c(theta_series(tau, cfg)), truncation_tail=cfg.quad_tol)
        elif args.target == "e2star":
            record.update(value=_c(e2_star(tau, cfg)), truncation_tail=cfg.quad_tol)
        else:
            direct = eisenstein_direct("H", args.k, args.s, tau, cfg)
            fourier = eisenstein_fourier(args.k, args.s, tau, cfg)
            record.update(k=args.k, s=args.s, value=_c(direct),
                          fourier_value=_c(fourier),
                          route_difference=abs(direct - fourier))
    except ValueError as exc:
        return _fail(2, f"evaluation outside the convergence domain: {exc}")
    if args.format == "json":
        print(json.dumps({"command": "eval", "params": record.copy(),
                          "results": [record], "summary": {"entries": 1}}, indent=2))
    else:
        for key, value in record.items():
            print(f"{key}: {value}")
    return 0


def _c(z: complex):
    return [z.real, z.imag]


def _cmd_verify(args) -> int:
    cfg = _config_from(args)
    records = run_suite(args.suite, cfg, args.seed)
    n_passed = sum(r.passed for r in records)
    if args.format == "json":
        payload = {
            "command": "verify",
            "params": {"suite": args.suite, "seed": args.seed},
            "results": [r.as_dict() for r in records],
            "summary": {"total": len(records), "passed": n_passed,
                        "failed": len(records) - n_passed},
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in records:
            status = "PASS" if r.passed else "FAIL"
            print(f"[{status}] {r.check_name} {r.parameters} "
                  f"residual={r.residual:.3e} tol={r.tolerance:.1e} ({r.elapsed_ms} ms)")
        print(f"{n_passed}/{len(records)} checks passed")
    return 0 if n_passed == len(records) else 2


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "hurwitz":
        code = _cmd_hurwitz(args)
    elif args.command == "eval":
        code = _cmd_eval(args)
    else:
        code = _cmd_verify(args)
    return code


if __name__ == "__main__":
    sys.exit(main())
