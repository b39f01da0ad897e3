"""Command-line front end: ``ptmsums compute|verify|partition|conjecture``.

Exit codes: 0 success, 1 counterexample, 2 usage or configuration error,
3 brute-force budget exceeded.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .conjectures import sweep
from .core import PtmContext
from .digitseq import PRESETS, SeqSpec, preset
from .errors import BudgetExceeded
from .kernels import BUDGET_WARNING, default_budget
from .prouhet import DigitTuple, prouhet_partition
from .suites import SUITES, SuiteConfig, run_suite, suite_names

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    k: int = 2
    d: int | None = None
    spec: SeqSpec | None = None
    m: int | None = None
    n: int | None = None
    r: int | None = None
    budget: int = 1 << 20
    json: bool = False
    seed: int = 7

    def __post_init__(self):
        if self.k < 2:
            raise UsageError(f"--k must be at least 2, got {self.k}")
        if self.d is not None and (self.d <= 1 or self.k % self.d):
            raise UsageError(f"--d must divide k={self.k} and exceed 1, got {self.d}")
        if self.budget < 1:
            raise UsageError("--budget must be at least 1")


def _load_spec(args):
    if args.spec and args.preset:
        raise UsageError("give either --preset or --spec, not both")
    if args.spec:
        try:
            spec = SeqSpec.from_json(Path(args.spec).read_text())
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read spec {args.spec}: {exc}") from None
        if args.k is not None and args.k != spec.k:
            raise UsageError(f"--k {args.k} disagrees with spec base {spec.k}")
        return spec
    return preset(args.preset or "n", args.k or 2)


def _config(args, spec=None):
    budget = args.budget if args.budget is not None else default_budget()
    k = spec.k if spec is not None else (args.k or 2)
    return RunConfig(
        subcommand=args.command,
        k=k,
        d=getattr(args, "d", None),
        spec=spec,
        m=getattr(args, "m", None),
        n=getattr(args, "n", None),
        r=getattr(args, "r", None),
        budget=budget,
        json=getattr(args, "json", False),
        seed=getattr(args, "seed", 7),
    )


def _warn_budget(cfg):
    if cfg.budget > BUDGET_WARNING:
        print(f"warning: budget {cfg.budget} exceeds 2^24 brute-force terms", file=sys.stderr)


# -- compute --------------------------------------------------------------------


def _compute_one(ctx, obj, m, n, method):
    if obj == "f":
        value = ctx.integrate_from_constants(m, n) if method == "recurrence" else ctx.f_bruteforce(m, n)
    elif obj == "F":
        value = ctx.F_bruteforce(m, n) if method == "bruteforce" else ctx.F_recurrence(m, n)
    else:
        if method == "closed":
            value = ctx.H_closed_form(m, n)
        elif method == "bruteforce":
            value = ctx.H_from_F(m, n, source="bruteforce")
        else:
            value = ctx.H_step_recurrence(m, n)
    if len(ctx.vars) == 1:
        # scalar sequences print actual values rather than multiples of v1
        value = value.subs({ctx.vars[0]: 1})
    return value


def cmd_compute(args):
    spec = _load_spec(args)
    cfg = _config(args, spec)
    _warn_budget(cfg)
    ctx = PtmContext(spec, cfg.d, budget=cfg.budget)
    if args.max_n is not None:
        pairs = [(m, n) for n in range(args.max_n + 1) for m in range(n + (args.m if args.m is not None else 2) + 1)]
    else:
        if cfg.m is None or cfg.n is None:
            raise UsageError("compute needs --m and --n (or --max-n for a table)")
        pairs = [(cfg.m, cfg.n)]
    method = args.method or ("bruteforce" if args.object == "f" else "recurrence")
    rows = [(m, n, _compute_one(ctx, args.object, m, n, method)) for m, n in pairs]
    if cfg.json:
        print(json.dumps([{"m": m, "n": n, "poly": v.text()} for m, n, v in rows]))
    elif len(rows) == 1:
        print(rows[0][2].text())
    else:
        for m, n, v in rows:
            print(f"{args.object}[{m},{n}] = {v.text()}")
    return EXIT_OK


# -- verify ---------------------------------------------------------------------


def _run_named(job):
    name, scfg = job
    return run_suite(name, scfg)


def cmd_verify(args):
    cfg = _config(args)
    _warn_budget(cfg)
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    if args.v is not None:
        try:
            DigitTuple.parse(args.v)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    scfg = SuiteConfig(
        max_n=args.max_n if args.max_n is not None else 4,
        seed=cfg.seed,
        k=args.k,
        d=cfg.d,
        n=cfg.n,
        m=cfg.m,
        r=cfg.r,
        v=args.v,
        budget=cfg.budget,
    )
    jobs = [(name, scfg) for name in suite_names(args.suite)]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_named, jobs))
    else:
        reports = [_run_named(j) for j in jobs]
    failed = 0
    for rep in reports:
        if not args.timing:
            rep.elapsed_ms = 0
        failed += not rep.ok
        print(json.dumps(rep.to_dict(), sort_keys=True) if cfg.json else rep.summary())
    if not cfg.json:
        print(f"{len(reports) - failed}/{len(reports)} suites verified")
    return EXIT_FAIL if failed else EXIT_OK


# -- partition / conjecture -------------------------------------------------------


def cmd_partition(args):
    cfg = _config(args)
    _warn_budget(cfg)
    if cfg.n is None or args.v is None:
        raise UsageError("partition needs --k, --n and --v")
    part = prouhet_partition(cfg.k, cfg.n, DigitTuple.parse(args.v), budget=cfg.budget)
    print(json.dumps(part.to_dict()))
    return EXIT_OK


def cmd_conjecture(args):
    cfg = _config(args)
    if args.max_total < 1:
        raise UsageError("--max-total must be positive")
    max_parts = args.max_parts if args.max_parts is not None else (2 if args.which == 3 else 3)
    reports = sweep(args.which, args.max_total, max_parts=max_parts, k=cfg.k, d=cfg.d, jobs=args.jobs)
    print(json.dumps([r.to_dict() for r in reports], indent=1))
    return EXIT_OK if all(r.status != "counterexample" for r in reports) else EXIT_FAIL


# -- parser ---------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="ptmsums", description="Exact Prouhet-Thue-Morse power sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--k", type=int, default=None, help="digit base")
        p.add_argument("--d", type=int, default=None, help="order of the root of unity (d | k, d > 1)")
        p.add_argument("--budget", type=int, default=None, help="brute-force term budget")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, default=7)
        p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("compute", help="compute f, F or H")
    p.add_argument("object", choices=["f", "F", "H"])
    p.add_argument("--preset", choices=PRESETS)
    p.add_argument("--spec", help="JSON file with k, P, q")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int, help="dump a table for all n up to this bound")
    p.add_argument("--method", choices=["bruteforce", "recurrence", "closed", "step"])
    common(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", help="suite name or 'all'")
    p.add_argument("--max-n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--v", help="comma-separated digit tuple")
    p.add_argument("--timing", action="store_true", help="report elapsed_ms (breaks byte-identical output)")
    common(p)

    p = sub.add_parser("partition", help="digit-count partition of 0..k^n-1")
    p.add_argument("--n", type=int)
    p.add_argument("--v", help="comma-separated digit tuple")
    common(p)

    p = sub.add_parser("conjecture", help="bounded conjecture sweep")
    p.add_argument("which", type=int, choices=[1, 2, 3])
    p.add_argument("--max-total", type=int, required=True, help="bound on enumerated terms per point")
    p.add_argument("--max-parts", type=int, help="tuple length (conjecture 3: largest m)")
    common(p)
    return parser


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "partition": cmd_partition, "conjecture": cmd_conjecture}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
