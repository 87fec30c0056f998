"""Command-line front end: radius computation, sweeps, verification, lemma checks.

Exit codes: 0 on success, 1 when a verification or certification fails
(some ``passed`` is false or a violation count is nonzero), 2 on usage errors.
Output is deterministic: identical argv and seed produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass, replace

from .errors import CombradiiError, UsageError
from .functions import FunctionClass
from .lemmas import (
    DEFAULT_SEED,
    certify_disk_envelope,
    certify_product_bound,
    certify_weight_maximum,
    certify_weighted_sum_bounds,
)
from .radii import Mode, RadiusQuery, RadiusResult, Variant, radius, resolve_variant
from .verify import DEFAULT_MARGIN, verify_radius

#: (class, mode) pairs whose polynomial exists in two coefficient variants
VARIANT_FAMILIES = {
    (FunctionClass.POLE, Mode.CONVEXITY),
    (FunctionClass.POLE, Mode.CONCAVITY),
    (FunctionClass.CONCAVE, Mode.CONCAVITY),
}


def _fmt(x: float) -> str:
    """15 significant digits, '.' decimal separator, no locale surprises."""
    if x != x:
        return "nan"
    return format(x, ".15g")


def _json_safe(x: float | None) -> float | None:
    # strict JSON has no NaN literal; a missing root serializes as null
    return None if x is None or x != x else x


def _fmt_opt(x: float | None) -> str:
    return "nan" if x is None else _fmt(x)


def _add_query_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--class", dest="cls", required=True, choices=["s", "sp", "coa"],
                     help="function class: s (analytic univalent), sp (simple pole in (0,1)), coa (concave)")
    sub.add_argument("--mode", required=True, choices=[m.value for m in Mode],
                     help="which radius to compute")
    sub.add_argument("--n", type=int, default=1, help="number of coefficient pairs (2n functions)")
    sub.add_argument("--alpha", default="0",
                     help="comma-separated pair angles in radians, each in [0, pi) -- "
                          "the upper bound is open because sec(alpha/2) diverges at pi")
    sub.add_argument("--p", type=float, default=None, help="pole location in (0,1), sp class")
    sub.add_argument("--A", type=float, default=None, help="concavity parameter in (1,2]")
    sub.add_argument("--rho", type=float, default=None,
                     help="univalence scale; defaults to the classical bound for the class")
    sub.add_argument("--variant", choices=[v.value for v in Variant], default=None,
                     help="coefficient variant where the printed and derived forms differ")
    sub.add_argument("--tol", type=float, default=1e-12, help="absolute tolerance on the isolated root")


def _add_common(sub: argparse.ArgumentParser, formats=("table", "csv", "json")) -> None:
    sub.add_argument("--format", choices=list(formats), default="table")
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)


RADIUS_CSV_COLUMNS = ("class,mode,n,alphas,p,A,rho,variant,radius,status,bracket,"
                      "iterations,poly,alt_variant_radius,variant_gap")
SWEEP_CSV_COLUMNS = "axis,value,radius,status"
VERIFY_CSV_COLUMNS = ("class,mode,n,alphas,p,A,radius,margin,min_re,worst_z_re,"
                      "worst_z_im,samples,passed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="combradii",
        description="Radii of univalence, convexity and concavity for linear "
                    "combinations of univalent functions, with verification.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_radius = subs.add_parser("radius", help="compute one radius",
                               epilog=f"CSV columns: {RADIUS_CSV_COLUMNS}; list cells joined by ';'. "
                                      "Floats carry 15 significant digits.")
    _add_query_args(p_radius)
    _add_common(p_radius)

    p_sweep = subs.add_parser("sweep", help="sweep one query parameter",
                              epilog=f"CSV columns: {SWEEP_CSV_COLUMNS}.")
    _add_query_args(p_sweep)
    _add_common(p_sweep)
    p_sweep.add_argument("--axis", required=True,
                         help="parameter to sweep: alpha1..alphaN, p, or A")
    p_sweep.add_argument("--range", required=True, dest="sweep_range", metavar="START:STOP:STEPS",
                         help="inclusive range with STEPS >= 2 grid points")

    p_verify = subs.add_parser("verify", help="verify a radius against fixture combinations",
                               epilog=f"CSV columns: {VERIFY_CSV_COLUMNS}. Exits 1 when not passed.")
    _add_query_args(p_verify)
    _add_common(p_verify)
    p_verify.add_argument("--margin", type=float, default=DEFAULT_MARGIN,
                          help="sample up to margin*radius (in (0,1))")

    p_lemma = subs.add_parser("lemma", help="run the randomized inequality certifications")
    p_lemma.add_argument("--trials", type=int, default=100_000)
    p_lemma.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def _query_from_args(args: argparse.Namespace) -> RadiusQuery:
    try:
        alphas = tuple(float(tok) for tok in str(args.alpha).split(",") if tok != "")
    except ValueError as exc:
        raise UsageError(f"could not parse --alpha {args.alpha!r}: {exc}") from exc
    variant = Variant(args.variant) if args.variant else None
    return RadiusQuery(
        cls=FunctionClass(args.cls),
        mode=Mode(args.mode),
        n=args.n,
        alphas=alphas,
        p=args.p,
        A=args.A,
        rho=args.rho,
        variant=variant,
    )


def _result_dict(query: RadiusQuery, result: RadiusResult, tol: float) -> dict:
    data = {
        "class": query.cls.value,
        "mode": query.mode.value,
        "n": query.n,
        "alphas": list(query.alphas),
        "p": query.p,
        "A": query.A,
        "rho": query.rho,
        "variant": resolve_variant(query).value if query.mode != Mode.UNIVALENCE else None,
        "radius": _json_safe(result.radius),
        "status": result.status.value,
        "bracket": [result.bracket[0], result.bracket[1]],
        "iterations": result.iterations,
        "poly": list(result.poly.coeffs) if result.poly is not None else None,
        "alt_variant_radius": None,
        "variant_gap": None,
    }
    # where the printed and derived coefficient tables disagree, always show
    # the other variant's root next to the chosen one instead of hiding it
    if (query.cls, query.mode) in VARIANT_FAMILIES:
        used = resolve_variant(query)
        other = Variant.AS_PROOF if used == Variant.AS_STATED else Variant.AS_STATED
        alt = radius(replace(query, variant=other), tol)
        data["alt_variant_radius"] = _json_safe(alt.radius)
        if alt.radius == alt.radius and result.radius == result.radius:
            data["variant_gap"] = abs(alt.radius - result.radius)
    return data


def _print_kv_table(data: dict, out) -> None:
    for key, value in data.items():
        if isinstance(value, float):
            value = _fmt(value)
        elif isinstance(value, list):
            value = ", ".join(_fmt(v) if isinstance(v, float) else str(v) for v in value)
        elif value is None:
            value = "-"
        out.write(f"{key} = {value}\n")


def _cmd_radius(args: argparse.Namespace, out) -> int:
    query = _query_from_args(args)
    result = radius(query, tol=args.tol)
    data = _result_dict(query, result, args.tol)
    if args.format == "json":
        out.write(json.dumps(data, sort_keys=True) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        keys = list(data)
        writer.writerow(keys)
        writer.writerow([_csv_cell(data[k]) for k in keys])
    else:
        _print_kv_table(data, out)
    return 0


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, list):
        return ";".join(_fmt(v) if isinstance(v, float) else str(v) for v in value)
    return str(value)


@dataclass(frozen=True)
class SweepSpec:
    """One-axis sweep of a query template over an inclusive grid.

    The axis is alpha1..alphaN, p, or A; the grid needs at least two points
    and must stay inside the axis's legal domain.
    """

    base: RadiusQuery
    axis: str
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.steps < 2:
            raise UsageError(f"a sweep needs at least 2 steps, got {self.steps}")
        if not self.stop > self.start:
            raise UsageError(f"sweep range needs STOP > START, got {self.start}:{self.stop}")
        lo, hi = self._axis_domain()
        if not (lo[0] <= self.start if lo[1] else lo[0] < self.start):
            raise UsageError(f"axis {self.axis!r} starts outside its domain at {self.start}")
        if not (self.stop <= hi[0] if hi[1] else self.stop < hi[0]):
            raise UsageError(f"axis {self.axis!r} stops outside its domain at {self.stop}")

    def _axis_domain(self) -> tuple[tuple[float, bool], tuple[float, bool]]:
        # ((bound, inclusive), (bound, inclusive)) per axis
        if self.axis == "p":
            return (0.0, False), (1.0, False)
        if self.axis == "A":
            return (1.0, False), (2.0, True)
        if self.axis.startswith("alpha"):
            try:
                k = int(self.axis[len("alpha"):])
            except ValueError as exc:
                raise UsageError(f"unknown sweep axis {self.axis!r}; use alpha1..alphaN, p, or A") from exc
            if not 1 <= k <= self.base.n:
                raise UsageError(f"axis {self.axis!r} is out of range for n={self.base.n}")
            return (0.0, True), (math.pi, False)
        raise UsageError(f"unknown sweep axis {self.axis!r}; use alpha1..alphaN, p, or A")

    def values(self) -> list[float]:
        return [self.start + (self.stop - self.start) * i / (self.steps - 1) for i in range(self.steps)]

    def query_at(self, value: float) -> RadiusQuery:
        if self.axis == "p":
            return replace(self.base, p=value)
        if self.axis == "A":
            return replace(self.base, A=value)
        k = int(self.axis[len("alpha"):])
        alphas = list(self.base.alphas)
        alphas[k - 1] = value
        return replace(self.base, alphas=tuple(alphas))


def run_sweep(spec: SweepSpec, tol: float = 1e-12) -> list[dict]:
    rows = []
    for value in spec.values():
        result = radius(spec.query_at(value), tol=tol)
        rows.append({"axis": spec.axis, "value": value, "radius": _json_safe(result.radius),
                     "status": result.status.value})
    return rows


def _cmd_sweep(args: argparse.Namespace, out) -> int:
    base = _query_from_args(args)
    try:
        start_s, stop_s, steps_s = args.sweep_range.split(":")
        start, stop, steps = float(start_s), float(stop_s), int(steps_s)
    except ValueError as exc:
        raise UsageError(f"--range must look like START:STOP:STEPS, got {args.sweep_range!r}") from exc
    spec = SweepSpec(base, args.axis, start, stop, steps)
    rows = run_sweep(spec, tol=args.tol)
    if args.format == "json":
        out.write(json.dumps(rows, sort_keys=True) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["axis", "value", "radius", "status"])
        for row in rows:
            writer.writerow([row["axis"], _fmt(row["value"]), _fmt_opt(row["radius"]), row["status"]])
    else:
        out.write(f"{'axis':<8} {'value':>20} {'radius':>20} status\n")
        for row in rows:
            out.write(f"{row['axis']:<8} {_fmt(row['value']):>20} {_fmt_opt(row['radius']):>20} {row['status']}\n")
    return 0


def _cmd_verify(args: argparse.Namespace, out) -> int:
    query = _query_from_args(args)
    report = verify_radius(query, margin=args.margin, tol=args.tol)
    data = {
        "class": query.cls.value,
        "mode": query.mode.value,
        "n": query.n,
        "alphas": list(query.alphas),
        "p": query.p,
        "A": query.A,
        "radius": report.radius,
        "margin": report.margin,
        "min_re": report.min_re,
        "worst_z_re": report.worst_z.real,
        "worst_z_im": report.worst_z.imag,
        "samples": report.samples,
        "passed": report.passed,
    }
    if args.format == "json":
        out.write(json.dumps(data, sort_keys=True) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        keys = list(data)
        writer.writerow(keys)
        writer.writerow([_csv_cell(v) for v in data.values()])
    else:
        _print_kv_table(data, out)
    return 0 if report.passed else 1


def _cmd_lemma(args: argparse.Namespace, out) -> int:
    if args.trials < 1:
        raise UsageError(f"--trials must be positive, got {args.trials}")
    reports = [
        certify_weighted_sum_bounds(trials=args.trials, seed=args.seed),
        certify_product_bound(trials=max(1, args.trials // 10), seed=args.seed),
        certify_weight_maximum(trials=max(1, args.trials // 100), seed=args.seed),
        certify_disk_envelope(trials=max(1, args.trials // 100), seed=args.seed),
    ]
    total = 0
    for rep in reports:
        out.write(f"{rep.name}: trials={rep.trials} violations={rep.violations} "
                  f"worst_slack={_fmt(rep.worst_slack)}\n")
        total += rep.violations
    out.write(f"violations: {total}\n")
    return 0 if total == 0 else 1


def run(argv: list[str] | None = None, out=None) -> int:
    """Parse argv and execute; returns the process exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 2
    try:
        if args.command == "radius":
            return _cmd_radius(args, out)
        if args.command == "sweep":
            return _cmd_sweep(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        return _cmd_lemma(args, out)
    except CombradiiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
