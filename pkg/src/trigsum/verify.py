"""Grid sweeps measuring residuals between independent evaluation routes.

Every pair puts two computations of the same quantity side by side (closed
form vs literal sum, two closed forms against each other, or the geometric
simulation vs its closed coordinate) over a uniform angle grid times a list
of term counts. Points where the pair's denominator magnitude falls below
the guard are skipped and counted, so a report always accounts for the full
grid cardinality. Reports serialize deterministically: identical inputs give
byte-identical CSV and JSON.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from . import geometry, kernels
from .angle import Angle, as_angle
from .errors import BadRange, EmptyGrid, SingularDenominator, TrigsumError
from .formatting import fmt17

#: Above this many grid points, per-point rows are dropped by default and
#: only the aggregate statistics are kept.
ROW_RETENTION_LIMIT = 100_000


class ResidualPair(Enum):
    """Named pairs of evaluation routes for the same sum or coordinate."""

    LAGRANGE_VS_NAIVE = "LagrangeVsNaive"
    HALFANGLE_VS_NAIVE = "HalfangleVsNaive"
    LAGRANGE_VS_HALFANGLE = "LagrangeVsHalfangle"
    EVEN_VS_NAIVE = "EvenVsNaive"
    ODD_VS_NAIVE = "OddVsNaive"
    PROJECTION_VS_CLOSED_FORM = "ProjectionVsClosedForm"
    DECOMPOSITION_VS_HALFANGLE = "DecompositionVsHalfangle"


@dataclass(frozen=True)
class GridSpec:
    """A uniform inclusive angle grid crossed with a list of term counts.

    guard is the minimum denominator magnitude a grid angle must clear for
    the pair under sweep; angles below it are skipped and counted.
    """

    angle_min: float
    angle_max: float
    steps: int
    counts: tuple[int, ...]
    guard: float = 0.01

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(self.counts))
        if not (math.isfinite(self.angle_min) and math.isfinite(self.angle_max)):
            raise ValueError("angle bounds must be finite")
        if not self.angle_min < self.angle_max:
            raise BadRange(
                f"angle_min must be < angle_max, got [{self.angle_min}, {self.angle_max}]"
            )
        if self.steps < 2:
            raise BadRange(f"steps must be >= 2, got {self.steps}")
        if not self.counts:
            raise ValueError("counts must be non-empty")
        if any(c < 1 for c in self.counts):
            raise ValueError(f"counts must all be >= 1, got {self.counts}")
        if not (math.isfinite(self.guard) and self.guard >= 0.0):
            raise ValueError(f"guard must be finite and >= 0, got {self.guard}")

    def angles(self) -> list[float]:
        """The grid angles, endpoint-inclusive, in increasing order."""
        span = self.angle_max - self.angle_min
        last = self.steps - 1
        return [self.angle_min + span * i / last for i in range(self.steps)]


@dataclass(frozen=True)
class ResidualReport:
    """Aggregate residual statistics of one sweep, plus optional rows."""

    pair: ResidualPair
    evaluated: int
    skipped: int
    max_abs_residual: float
    mean_abs_residual: float
    argmax_angle: float
    argmax_count: int
    rows: tuple[tuple[float, int, float], ...] | None = None

    def to_json(self) -> str:
        """One-line JSON summary, floats with 17 significant digits."""
        return (
            "{"
            f'"pair": "{self.pair.value}", '
            f'"evaluated": {self.evaluated}, '
            f'"skipped": {self.skipped}, '
            f'"max_abs_residual": {fmt17(self.max_abs_residual)}, '
            f'"mean_abs_residual": {fmt17(self.mean_abs_residual)}, '
            f'"argmax_angle": {fmt17(self.argmax_angle)}, '
            f'"argmax_count": {self.argmax_count}'
            "}\n"
        )

    def to_csv(self) -> str:
        """Per-point rows as CSV; requires the sweep to have kept rows."""
        if self.rows is None:
            raise ValueError("rows were not retained for this sweep")
        lines = ["pair,angle,count,residual"]
        name = self.pair.value
        for angle, count, residual in self.rows:
            lines.append(f"{name},{fmt17(angle)},{count},{fmt17(residual)}")
        return "\n".join(lines) + "\n"


def _res_lagrange_naive(rad: float, m: int) -> float:
    return kernels.lagrange_sum(rad, m, threshold=0.0) - kernels.naive_trig_sum(
        kernels.SumSpec(Angle(rad), m, kernels.Family.FULL)
    )


def _res_halfangle_naive(rad: float, m: int) -> float:
    return kernels.halfangle_free_sum(rad, m, threshold=0.0) - kernels.naive_trig_sum(
        kernels.SumSpec(Angle(rad), m, kernels.Family.FULL)
    )


def _res_lagrange_halfangle(rad: float, m: int) -> float:
    return kernels.lagrange_sum(rad, m, threshold=0.0) - kernels.halfangle_free_sum(
        rad, m, threshold=0.0
    )


def _res_even_naive(rad: float, k: int) -> float:
    return kernels.even_index_sum(rad, k, threshold=0.0) - kernels.naive_trig_sum(
        kernels.SumSpec(Angle(rad), k, kernels.Family.EVEN)
    )


def _res_odd_naive(rad: float, k: int) -> float:
    return kernels.odd_index_sum(rad, k, threshold=0.0) - kernels.naive_trig_sum(
        kernels.SumSpec(Angle(rad), k, kernels.Family.ODD)
    )


def _res_projection_closed(rad: float, k: int) -> float:
    # The x-projections of the first 2k+2 segments telescope to the terminal
    # abscissa, whose closed form is the identity's right-hand side.
    n = 2 * k + 2
    seq = geometry.construct_points(geometry.ConstructionConfig(Angle(rad), n))
    lhs = geometry.projection_sum(seq, geometry.Line.X, n)
    _, rhs = kernels.x_coordinate_identity(rad, k, threshold=0.0)
    return lhs - rhs


def _res_decomposition_halfangle(rad: float, k: int) -> float:
    parts = kernels.even_index_sum(rad, k, threshold=0.0) + kernels.odd_index_sum(
        rad, k, threshold=0.0
    )
    return parts - kernels.halfangle_free_sum(rad, 2 * k, threshold=0.0)


def _den_half(rad: float) -> float:
    return abs(math.sin(0.5 * rad))


def _den_whole(rad: float) -> float:
    return abs(math.sin(rad))


def _den_both(rad: float) -> float:
    return min(abs(math.sin(0.5 * rad)), abs(math.sin(rad)))


def _den_construction(rad: float) -> float:
    return min(abs(math.sin(rad)), abs(math.cos(rad)))


_PAIR_RULES: dict[
    ResidualPair, tuple[Callable[[float], float], Callable[[float, int], float]]
] = {
    ResidualPair.LAGRANGE_VS_NAIVE: (_den_half, _res_lagrange_naive),
    ResidualPair.HALFANGLE_VS_NAIVE: (_den_whole, _res_halfangle_naive),
    ResidualPair.LAGRANGE_VS_HALFANGLE: (_den_both, _res_lagrange_halfangle),
    ResidualPair.EVEN_VS_NAIVE: (_den_whole, _res_even_naive),
    ResidualPair.ODD_VS_NAIVE: (_den_whole, _res_odd_naive),
    ResidualPair.PROJECTION_VS_CLOSED_FORM: (_den_construction, _res_projection_closed),
    ResidualPair.DECOMPOSITION_VS_HALFANGLE: (_den_whole, _res_decomposition_halfangle),
}


def residual_sweep(
    grid: GridSpec, pair: ResidualPair, *, keep_rows: bool | None = None
) -> ResidualReport:
    """Evaluate a pair over the grid and aggregate |residual| statistics.

    Rows are kept in canonical order (angle-major, count-minor) when
    keep_rows is true, or by default when the grid has at most
    ROW_RETENTION_LIMIT points. A point whose evaluation raises a domain
    error (possible only with guard below the kernels' exact-zero check)
    counts as skipped, so evaluated + skipped always equals the grid size.
    """
    guard_fn, residual_fn = _PAIR_RULES[pair]
    total = grid.steps * len(grid.counts)
    if keep_rows is None:
        keep_rows = total <= ROW_RETENTION_LIMIT
    rows: list[tuple[float, int, float]] | None = [] if keep_rows else None

    evaluated = 0
    skipped = 0
    abs_sum = 0.0
    max_abs = -1.0
    argmax_angle = math.nan
    argmax_count = 0
    for rad in grid.angles():
        if guard_fn(rad) < grid.guard:
            skipped += len(grid.counts)
            continue
        for count in grid.counts:
            try:
                residual = residual_fn(rad, count)
            except TrigsumError:
                skipped += 1
                continue
            evaluated += 1
            magnitude = abs(residual)
            abs_sum += magnitude
            if magnitude > max_abs:
                max_abs = magnitude
                argmax_angle = rad
                argmax_count = count
            if rows is not None:
                rows.append((rad, count, residual))
    if evaluated == 0:
        raise EmptyGrid(f"all {total} grid points were guarded out")
    return ResidualReport(
        pair=pair,
        evaluated=evaluated,
        skipped=skipped,
        max_abs_residual=max_abs,
        mean_abs_residual=abs_sum / evaluated,
        argmax_angle=argmax_angle,
        argmax_count=argmax_count,
        rows=tuple(rows) if rows is not None else None,
    )


@dataclass(frozen=True)
class MethodComparison:
    """One method's value and signed residual against the literal sum."""

    method: str
    value: float | None
    residual: float | None
    skipped_reason: str | None = None


def compare_methods(phi: Angle | float, m: int) -> list[MethodComparison]:
    """Evaluate every applicable route for the full-family sum at (phi, m).

    Always reports the naive sum and both closed forms; for even m also the
    even+odd split at k = m/2. Routes whose denominator guard trips are
    reported as skipped with the reason instead of raising.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    rad = as_angle(phi).radians
    oracle = kernels.naive_trig_sum(kernels.SumSpec(Angle(rad), m, kernels.Family.FULL))
    out = [MethodComparison("naive", oracle, 0.0)]

    closed: Sequence[tuple[str, Callable[[], float]]] = [
        ("lagrange", lambda: kernels.lagrange_sum(rad, m)),
        ("halfangle", lambda: kernels.halfangle_free_sum(rad, m)),
    ]
    if m % 2 == 0:
        k = m // 2
        closed = [
            *closed,
            (
                "decomposition",
                lambda: kernels.even_index_sum(rad, k) + kernels.odd_index_sum(rad, k),
            ),
        ]
    for name, fn in closed:
        try:
            value = fn()
        except SingularDenominator as exc:
            out.append(MethodComparison(name, None, None, str(exc)))
        else:
            out.append(MethodComparison(name, value, value - oracle))
    return out
