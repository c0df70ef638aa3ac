"""Recursive two-line unit-segment construction and its closed coordinate forms.

Two lines meet at the origin with opening angle a: the x axis and a line e
with unit direction (cos a, sin a). A_0 is the origin and A_1 sits one unit
along the start line; every later point A_l lies on the line of its parity
(the lines alternate) at unit distance from A_{l-1}, choosing the circle-line
intersection farther from A_{l-2}. The signed position of each point along
its own line then follows the second-kind Chebyshev recurrence, which is what
the closed-form coordinate functions evaluate directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .angle import Angle, as_angle
from .chebyshev import chebyshev_u
from .errors import (
    ConstructionImpossible,
    CountOutOfRange,
    ExcludedAngle,
    SingularAngle,
)
from .formatting import fmt17

#: Rejection tolerance for degenerate opening angles. Near |cos a| = 0 every
#: second point falls back onto A_0 or A_1; near |sin a| = 0 the two lines
#: coincide and the alternating rule is ill-defined.
EPSILON_EXCLUDE = 1e-8

#: Tangency threshold on the circle-line discriminant (square-root rounding
#: noise scale at unit magnitudes).
TOL_TANGENT = 1e-10

_TWO_PI = 2.0 * math.pi


class Line(Enum):
    """The two construction lines; serialized as "x" and "e"."""

    X = "x"
    E = "e"


@dataclass(frozen=True)
class Point2:
    """A plane point with finite coordinates."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x!r}, {self.y!r})")


@dataclass(frozen=True)
class PlacedPoint:
    """One construction point together with the line it lies on."""

    index: int
    line: Line
    point: Point2


@dataclass(frozen=True)
class ConstructionConfig:
    """Inputs of a construction run.

    n is the number of points beyond A_0. epsilon_exclude rejects degenerate
    opening angles; tol_tangent decides when the step circle is treated as
    tangent to the target line.
    """

    alpha: Angle
    n: int
    start_line: Line = Line.X
    epsilon_exclude: float = EPSILON_EXCLUDE
    tol_tangent: float = TOL_TANGENT

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_angle(self.alpha))
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not self.epsilon_exclude > 0.0:
            raise ValueError("epsilon_exclude must be > 0")
        if not self.tol_tangent > 0.0:
            raise ValueError("tol_tangent must be > 0")


@dataclass(frozen=True)
class PointSeq:
    """An ordered construction run A_0 .. A_n.

    tangency_events lists the step indices where the step circle was tangent
    to the target line, forcing A_l = A_{l-2} despite the exclusion rule.
    """

    alpha: Angle
    start_line: Line
    points: tuple[PlacedPoint, ...]
    tangency_events: tuple[int, ...]

    @property
    def segment_count(self) -> int:
        return len(self.points) - 1

    def point_at(self, index: int) -> Point2:
        return self.points[index].point

    def to_csv(self) -> str:
        """Serialize as CSV rows index,line,x,y ordered by index."""
        rows = ["index,line,x,y"]
        for p in self.points:
            rows.append(f"{p.index},{p.line.value},{fmt17(p.point.x)},{fmt17(p.point.y)}")
        return "\n".join(rows) + "\n"


def line_for_index(index: int, start_line: Line) -> Line:
    """Parity rule: A_1 sits on start_line and the lines alternate.

    A_0 is the intersection point and lies on both lines; it is labeled with
    the even-parity line for consistency.
    """
    if index % 2 == 1:
        return start_line
    return Line.E if start_line is Line.X else Line.X


def _direction(line: Line, cos_a: float, sin_a: float) -> tuple[float, float]:
    """Unit direction of a line; line e points along (cos a, sin a) always."""
    if line is Line.X:
        return 1.0, 0.0
    return cos_a, sin_a


def _next_coordinate(
    s: float, prev2_t: float, cos_a: float, sin_a: float, tol_tangent: float
) -> tuple[float, bool]:
    """One construction step, in line coordinates.

    The current point sits at signed coordinate s on the other line; a
    candidate at coordinate t on the target line is at unit distance exactly
    when t^2 - 2 t s cos(a) + s^2 - 1 = 0 (both lines pass through the
    origin with opening angle a). A_{l-2} is itself a root of this quadratic,
    so preferring the intersection farther from it picks the other root.
    Returns (t, is_tangent).
    """
    proj = s * cos_a
    perp = s * sin_a  # signed distance from the current point to the target line
    disc = 1.0 - perp * perp  # squared half-chord
    if disc >= tol_tangent:
        half = math.sqrt(disc)
        lo, hi = proj - half, proj + half
        return (hi, False) if abs(hi - prev2_t) >= abs(lo - prev2_t) else (lo, False)
    if abs(perp) <= 1.0 + tol_tangent:
        return proj, True
    raise ConstructionImpossible(
        f"point-to-line distance {abs(perp)!r} exceeds 1 + tol: the unit circle "
        "misses the target line, which is unreachable for admissible angles"
    )


def construct_points(cfg: ConstructionConfig) -> PointSeq:
    """Run the construction and return the n+1 points with tangency events.

    Rejects opening angles where the construction degenerates (|cos a| or
    |sin a| below cfg.epsilon_exclude). At a tangent step the unique
    intersection is taken and the step index recorded.
    """
    rad = cfg.alpha.radians
    cos_a, sin_a = math.cos(rad), math.sin(rad)
    if abs(cos_a) < cfg.epsilon_exclude:
        raise ExcludedAngle(
            f"|cos(alpha)| = {abs(cos_a):.3e} < {cfg.epsilon_exclude:.3e}: "
            "every second point would fall back onto A0/A1"
        )
    if abs(sin_a) < cfg.epsilon_exclude:
        raise ExcludedAngle(
            f"|sin(alpha)| = {abs(sin_a):.3e} < {cfg.epsilon_exclude:.3e}: "
            "the two lines coincide"
        )

    # Signed coordinate of A_l along its own line; A_0 = 0, A_1 = +1.
    ts = [0.0, 1.0]
    tangencies: list[int] = []
    for index in range(2, cfg.n + 1):
        t, tangent = _next_coordinate(ts[-1], ts[-2], cos_a, sin_a, cfg.tol_tangent)
        if tangent:
            tangencies.append(index)
        ts.append(t)

    points = []
    for index, t in enumerate(ts):
        line = line_for_index(index, cfg.start_line)
        dx, dy = _direction(line, cos_a, sin_a)
        points.append(PlacedPoint(index, line, Point2(t * dx, t * dy)))
    return PointSeq(cfg.alpha, cfg.start_line, tuple(points), tuple(tangencies))


def closed_form_point(alpha: Angle | float, n: int) -> Point2:
    """Trigonometric coordinates (cot a * sin(n a), sin(n a)).

    This is the on-line-e form: under the A_1-on-x convention it gives A_n
    for even n. It evaluates for any n >= 1; callers enforce the parity
    convention. Undefined where sin a vanishes.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rad = as_angle(alpha).radians
    sin_a = math.sin(rad)
    if abs(sin_a) < EPSILON_EXCLUDE:
        raise SingularAngle(f"|sin(alpha)| = {abs(sin_a):.3e}: cot(alpha) undefined")
    sin_na = math.sin(n * rad)
    return Point2(math.cos(rad) / sin_a * sin_na, sin_na)


def chebyshev_form_point(alpha: Angle | float, n: int) -> Point2:
    """Polynomial coordinates (cos a * U_{n-1}(cos a), sin a * U_{n-1}(cos a)).

    Total in a (no singularity); equals closed_form_point wherever both are
    defined.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rad = as_angle(alpha).radians
    u = chebyshev_u(n - 1, math.cos(rad))
    return Point2(math.cos(rad) * u, math.sin(rad) * u)


def projection_sum(seq: PointSeq, target: Line, count: int) -> float:
    """Signed scalar projections of the first count segments onto target.

    Each segment A_{l-1} -> A_l is projected onto the unit direction of the
    target line and the projections are accumulated in index order. Onto
    line x the sum telescopes to the x-coordinate of A_count.
    """
    if count < 1 or count > seq.segment_count:
        raise CountOutOfRange(
            f"count must be in 1..{seq.segment_count}, got {count}"
        )
    rad = seq.alpha.radians
    dx, dy = _direction(target, math.cos(rad), math.sin(rad))
    total = 0.0
    pts = seq.points
    for l in range(1, count + 1):
        sx = pts[l].point.x - pts[l - 1].point.x
        sy = pts[l].point.y - pts[l - 1].point.y
        total += sx * dx + sy * dy
    return total


def segment_direction_angles(seq: PointSeq) -> list[float]:
    """Direction angle of each segment A_{l-1} -> A_l, reduced to [0, 2 pi).

    With A_1 on line x the angles follow l*a (even l) and -(l-1)*a (odd l)
    modulo 2 pi, which is the testable form of the isosceles-triangle
    rotation pattern at the vertices.
    """
    out = []
    for prev, cur in zip(seq.points, seq.points[1:]):
        ang = math.atan2(cur.point.y - prev.point.y, cur.point.x - prev.point.x)
        out.append(ang % _TWO_PI)
    return out
