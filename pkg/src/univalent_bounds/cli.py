"""Command line front end.

    univalent-bounds bound --lambda 1/8
    univalent-bounds verify fekete --lambda-range -2:3:0.125 --samples 500 --seed 7
    univalent-bounds verify radius --seed 7 --out radius.json
    univalent-bounds extremal case2 --lambda 0

``verify`` exits 0 when every report passes, 1 otherwise and 2 on usage
errors. The seed falls back to ``$UNIVALENT_BOUNDS_SEED`` and then to 0.
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys
from fractions import Fraction

from . import bounds, verify
from .classes import fekete_functional
from .grid import DEFAULT_ANGLES, DEFAULT_GRID_R_MAX, DEFAULT_RADII, GridSpec
from .power_series import DEFAULT_ORDER

SEED_ENV = "UNIVALENT_BOUNDS_SEED"
THEOREMS = ("fekete", "growth", "distortion", "radius", "norm", "omega")
EXTREMALS = ("f2", "f3", "case2")
RANGE_TOL = 1e-12


class UsageError(Exception):
    pass


def parse_lambda(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from exc


def parse_lambda_range(text: str) -> list[Fraction]:
    """``start:end:step`` with both endpoints included (to within 1e-12)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("lambda range must look like start:end:step")
    start, end, step = (parse_lambda(p) for p in parts)
    if step <= 0 or end < start:
        raise argparse.ArgumentTypeError("lambda range needs step > 0 and end >= start")
    out, k = [], 0
    while start + k * step <= end + Fraction(RANGE_TOL):
        out.append(start + k * step)
        k += 1
    return out


def _fmt_fraction(x: Fraction) -> str:
    return str(x.limit_denominator(10**6))


def cmd_bound(args) -> int:
    lam = args.lam
    value = bounds.fekete_szego_bound(lam)
    print(f"{_fmt_fraction(value)} ≈ {float(value):.6f}, branch {bounds.fekete_szego_branch(lam)}")
    return 0


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError as exc:
        raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}") from exc


def _grid(args) -> GridSpec:
    return GridSpec.chebyshev(args.grid_radii, args.grid_angles, DEFAULT_GRID_R_MAX)


def _run(theorem: str, args, seed: int) -> list[verify.BoundReport]:
    common = dict(seed=seed, order=args.order)
    if theorem == "fekete":
        if args.lambda_range is not None:
            lambdas = args.lambda_range
        elif args.lam is not None:
            lambdas = [args.lam]
        else:
            lambdas = parse_lambda_range("-2:3:0.125")
        return verify.verify_fekete_campaign([float(x) for x in lambdas], args.samples, **common)
    if theorem in ("growth", "distortion"):
        g, d = verify.verify_growth_distortion(args.samples, grid=_grid(args), **common)
        return [g if theorem == "growth" else d]
    if theorem == "radius":
        return [verify.verify_radius(args.samples, grid=_grid(args), **common)]
    if theorem == "norm":
        return [verify.verify_pre_schwarzian(args.samples, grid=_grid(args), **common)]
    return [verify.omega_equivalence_campaign(args.cases, seed)]


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def cmd_verify(args) -> int:
    if args.theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; choose from {', '.join(THEOREMS)}")
    seed = _seed(args)
    if args.out is not None:
        parent = os.path.dirname(os.path.abspath(args.out))
        if not os.path.isdir(parent) or not os.access(parent, os.W_OK):
            raise UsageError(f"cannot write {args.out}: directory is missing or read-only")
    reports = _run(args.theorem, args, seed)
    if args.format == "csv":
        text = verify.reports_to_csv(reports)
    else:
        extra = {}
        if not args.no_timestamp:
            extra["generated_at"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
        if len(reports) == 1:
            doc = reports[0].to_dict()
            doc.update(extra)
        else:
            doc = {"schema": verify.SCHEMA_VERSION, "theorem_id": args.theorem,
                   "reports": [r.to_dict() for r in reports], **extra}
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    _write(text, args.out)
    ok = all(r.passed for r in reports)
    for r in reports:
        lam = f" lambda={r.lam:g}" if r.lam is not None else ""
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.theorem_id}{lam}: bound={r.bound_value:.9g} "
              f"empirical={r.empirical_max:.9g} margin={r.margin:.3g}", file=sys.stderr)
    if args.theorem == "omega":
        d = reports[0].details
        print(f"supported={d['supported']} unsupported={d['unsupported']} mismatches={d['mismatches']}",
              file=sys.stderr)
    return 0 if ok else 1


def cmd_extremal(args) -> int:
    lam = args.lam
    if args.name == "case2":
        if lam is None:
            raise UsageError("case2 requires --lambda")
        if not Fraction(-1, 3) < lam <= Fraction(1, 6):
            raise UsageError("case2 requires -1/3 < lambda <= 1/6")
        member = verify.extremal_case2_member(float(lam), args.order)
    elif args.name == "f2":
        member = verify.extremal_f2(args.order)
    else:
        member = verify.extremal_f3(args.order)
    lam = Fraction(0) if lam is None else lam
    print(f"a2 = {member.a2.real:.12g}")
    print(f"a3 = {member.a3.real:.12g}")
    print(f"Phi_{_fmt_fraction(lam)} = {fekete_functional(member, float(lam)):.12g}")
    print(json.dumps(member.to_dict(), sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="univalent-bounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="closed-form Fekete-Szego bound")
    p.add_argument("--lambda", dest="lam", type=parse_lambda, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("theorem", help=", ".join(THEOREMS))
    p.add_argument("--lambda", dest="lam", type=parse_lambda)
    p.add_argument("--lambda-range", type=parse_lambda_range)
    p.add_argument("--samples", type=int, default=verify.DEFAULT_SAMPLES)
    p.add_argument("--cases", type=int, default=200, help="random problems for 'omega'")
    p.add_argument("--seed", type=int)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--grid-radii", type=int, default=DEFAULT_RADII)
    p.add_argument("--grid-angles", type=int, default=DEFAULT_ANGLES)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extremal", help="coefficients of an extremal function")
    p.add_argument("name", choices=EXTREMALS)
    p.add_argument("--lambda", dest="lam", type=parse_lambda)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.set_defaults(func=cmd_extremal)
    return parser


def _validate(args) -> None:
    for name, lo in (("samples", 0), ("cases", 1), ("order", 4), ("grid_radii", 1), ("grid_angles", 1)):
        if getattr(args, name, lo) < lo:
            raise UsageError(f"--{name.replace('_', '-')} must be >= {lo}")


def _attach_negative_values(argv: list[str]) -> list[str]:
    # argparse would read "-2:3:0.125" or "-1/3" as an option flag
    out, it = [], iter(argv)
    for tok in it:
        if tok in ("--lambda", "--lambda-range"):
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and len(nxt) > 1 and (nxt[1].isdigit() or nxt[1] == "."):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_negative_values(argv))
    try:
        _validate(args)
        return args.func(args)
    except UsageError as exc:
        print(f"univalent-bounds: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
