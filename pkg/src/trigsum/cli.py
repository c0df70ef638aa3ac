"""Command-line front end for construction, summation, verification, orbits,
and benchmarking.

Exit codes: 0 on success, 1 for domain errors (excluded angles, singular
denominators, bad ranges), 2 for usage errors. File output goes through a
temp file renamed into place, so a failing run never leaves a partial file.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile

from .angle import Angle
from .bench import measure
from .errors import TrigsumError
from .formatting import fmt17
from .geometry import ConstructionConfig, Line, PointSeq, construct_points
from .kernels import (
    DEFAULT_THRESHOLD,
    Family,
    SumSpec,
    halfangle_free_sum,
    lagrange_sum,
    naive_trig_sum,
    sum_auto,
)
from .orbit import TWO_PI, EmitFormat, emit, orbit_samples
from .verify import GridSpec, ResidualPair, residual_sweep

#: Environment override for the fallback threshold of `sum` (decimal string).
THRESHOLD_ENV = "TRIGSUM_THRESHOLD"


def _add_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigsum",
        description="Closed-form cosine sums, their brute-force cross-checks, "
        "and the two-line unit-segment construction behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="simulate the two-line point construction")
    p.add_argument("--alpha", type=float, required=True, help="opening angle in radians")
    p.add_argument("--n", type=int, required=True, help="number of points beyond the origin")
    p.add_argument("--start-line", choices=["x", "e"], default="x",
                   help="line carrying the first unit point (default: x)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    _add_out(p)

    p = sub.add_parser("sum", help="evaluate a full-family cosine partial sum")
    p.add_argument("--phi", type=float, required=True, help="angle in radians")
    p.add_argument("--m", type=int, required=True, help="number of terms")
    p.add_argument("--method", choices=["lagrange", "halfangle", "auto", "naive"],
                   default="auto")
    p.add_argument("--threshold", type=float, default=None,
                   help=f"singularity threshold (default {DEFAULT_THRESHOLD:g}, "
                        f"or ${THRESHOLD_ENV})")
    _add_out(p)

    p = sub.add_parser("verify", help="sweep a residual pair over an angle grid")
    p.add_argument("--pair", choices=[pair.value for pair in ResidualPair], required=True)
    p.add_argument("--angle-min", type=float, required=True)
    p.add_argument("--angle-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--counts", required=True, help="comma-separated term counts")
    p.add_argument("--guard", type=float, default=0.01,
                   help="minimum denominator magnitude (default 0.01)")
    p.add_argument("--rows", action="store_true",
                   help="emit per-point CSV rows instead of the JSON summary")
    _add_out(p)

    p = sub.add_parser("orbit", help="sample the orbit curve of a construction point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha-min", type=float, default=0.0)
    p.add_argument("--alpha-max", type=float, default=TWO_PI)
    p.add_argument("--steps", type=int, default=1024)
    p.add_argument("--format", choices=["csv", "json", "svg"], required=True)
    _add_out(p)

    p = sub.add_parser("bench", help="time the naive sum against the closed form")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--repeats", type=int, required=True)
    _add_out(p)

    return parser


def _parse_counts(parser: argparse.ArgumentParser, text: str) -> tuple[int, ...]:
    try:
        counts = tuple(int(part) for part in text.split(","))
    except ValueError:
        parser.error(f"--counts expects comma-separated integers, got {text!r}")
    if not counts or any(c < 1 for c in counts):
        parser.error(f"--counts entries must be >= 1, got {text!r}")
    return counts


def _resolve_threshold(parser: argparse.ArgumentParser, flag_value: float | None) -> float:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(THRESHOLD_ENV)
    if raw is None:
        return DEFAULT_THRESHOLD
    try:
        return float(raw)
    except ValueError:
        parser.error(f"invalid {THRESHOLD_ENV} value {raw!r}")


def _pointseq_json(seq: PointSeq) -> str:
    points = ", ".join(
        f'[{p.index}, "{p.line.value}", {fmt17(p.point.x)}, {fmt17(p.point.y)}]'
        for p in seq.points
    )
    events = ", ".join(str(i) for i in seq.tangency_events)
    return (
        "{"
        f'"alpha": {fmt17(seq.alpha.radians)}, '
        f'"start_line": "{seq.start_line.value}", '
        f'"points": [{points}], '
        f'"tangency_events": [{events}]'
        "}\n"
    )


def _sum_json(value: float, method: str, proximity: float) -> str:
    return (
        "{"
        f'"value": {fmt17(value)}, '
        f'"method": "{method}", '
        f'"singular_proximity": {fmt17(proximity)}'
        "}\n"
    )


def _run_construct(args: argparse.Namespace) -> str:
    cfg = ConstructionConfig(alpha=Angle(args.alpha), n=args.n, start_line=Line(args.start_line))
    seq = construct_points(cfg)
    return seq.to_csv() if args.format == "csv" else _pointseq_json(seq)


def _run_sum(args: argparse.Namespace) -> str:
    threshold = args.effective_threshold
    if args.method == "auto":
        result = sum_auto(SumSpec(Angle(args.phi), args.m), threshold=threshold)
        return _sum_json(result.value, result.method.value, result.singular_proximity)
    if args.method == "lagrange":
        value = lagrange_sum(args.phi, args.m, threshold=threshold)
        proximity = abs(math.sin(0.5 * args.phi))
    elif args.method == "halfangle":
        value = halfangle_free_sum(args.phi, args.m, threshold=threshold)
        proximity = abs(math.sin(args.phi))
    else:
        value = naive_trig_sum(SumSpec(Angle(args.phi), args.m, Family.FULL))
        proximity = abs(math.sin(args.phi))
    return _sum_json(value, args.method, proximity)


def _run_verify(args: argparse.Namespace) -> str:
    grid = GridSpec(args.angle_min, args.angle_max, args.steps, args.counts_list, args.guard)
    report = residual_sweep(grid, ResidualPair(args.pair), keep_rows=args.rows)
    return report.to_csv() if args.rows else report.to_json()


def _run_orbit(args: argparse.Namespace) -> bytes:
    curve = orbit_samples(args.n, args.alpha_min, args.alpha_max, args.steps)
    return emit(curve, EmitFormat(args.format))


def _run_bench(args: argparse.Namespace) -> str:
    return measure(args.m, args.repeats).to_json()


_HANDLERS = {
    "construct": _run_construct,
    "sum": _run_sum,
    "verify": _run_verify,
    "orbit": _run_orbit,
    "bench": _run_bench,
}


def _write_output(payload: str | bytes, out_path: str | None) -> None:
    data = payload.encode("utf-8") if isinstance(payload, str) else payload
    if out_path is None:
        sys.stdout.write(data.decode("utf-8"))
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".trigsum-tmp-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, out_path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)


def run(argv: list[str] | None = None) -> int:
    """Parse argv, run the subcommand, write its output. Returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            args.counts_list = _parse_counts(parser, args.counts)
        elif args.command == "sum":
            args.effective_threshold = _resolve_threshold(parser, args.threshold)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        payload = _HANDLERS[args.command](args)
    except (TrigsumError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write_output(payload, args.out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
