"""Parametric curves traced by a fixed construction point as the angle varies.

For fixed n the point A_n sweeps the curve
(cos a * U_{n-1}(cos a), sin a * U_{n-1}(cos a)) as the opening angle a runs
over a range. Sampling uses the polynomial coordinate form exclusively: it
is total, so the curve crosses the sin a = 0 angles without gaps where the
cotangent form would blow up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import BadRange
from .formatting import fmt12, fmt17
from .geometry import chebyshev_form_point

TWO_PI = 2.0 * math.pi


class EmitFormat(Enum):
    CSV = "csv"
    JSON = "json"
    SVG = "svg"


@dataclass(frozen=True)
class OrbitCurve:
    """Uniform samples (alpha, x, y) of the orbit of A_n."""

    n: int
    alpha_min: float
    alpha_max: float
    steps: int
    samples: tuple[tuple[float, float, float], ...]


def orbit_samples(
    n: int,
    alpha_min: float = 0.0,
    alpha_max: float = TWO_PI,
    steps: int = 1024,
) -> OrbitCurve:
    """Sample the orbit of A_n uniformly, inclusive of both endpoints."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not (math.isfinite(alpha_min) and math.isfinite(alpha_max)):
        raise BadRange("alpha bounds must be finite")
    if not alpha_min < alpha_max:
        raise BadRange(
            f"alpha_min must be < alpha_max, got [{alpha_min}, {alpha_max}]"
        )
    if steps < 2:
        raise BadRange(f"steps must be >= 2, got {steps}")
    span = alpha_max - alpha_min
    last = steps - 1
    samples = []
    for i in range(steps):
        a = alpha_min + span * i / last
        p = chebyshev_form_point(a, n)
        samples.append((a, p.x, p.y))
    return OrbitCurve(n, alpha_min, alpha_max, steps, tuple(samples))


def emit(curve: OrbitCurve, fmt: EmitFormat) -> bytes:
    """Serialize a curve; a pure function, byte-identical for equal inputs."""
    if fmt is EmitFormat.CSV:
        text = _emit_csv(curve)
    elif fmt is EmitFormat.JSON:
        text = _emit_json(curve)
    else:
        text = _emit_svg(curve)
    return text.encode("utf-8")


def _emit_csv(curve: OrbitCurve) -> str:
    lines = ["alpha,x,y"]
    for a, x, y in curve.samples:
        lines.append(f"{fmt17(a)},{fmt17(x)},{fmt17(y)}")
    return "\n".join(lines) + "\n"


def _emit_json(curve: OrbitCurve) -> str:
    points = ", ".join(
        f"[{fmt17(a)}, {fmt17(x)}, {fmt17(y)}]" for a, x, y in curve.samples
    )
    return (
        "{"
        f'"n": {curve.n}, '
        f'"alpha_min": {fmt17(curve.alpha_min)}, '
        f'"alpha_max": {fmt17(curve.alpha_max)}, '
        f'"steps": {curve.steps}, '
        f'"points": [{points}]'
        "}\n"
    )


def _padded(lo: float, hi: float) -> tuple[float, float]:
    # Degenerate extents get a half-unit pad so the viewBox keeps positive size.
    pad = 0.05 * (hi - lo) if hi > lo else 0.5
    return lo - pad, hi + pad


def _emit_svg(curve: OrbitCurve) -> str:
    """A single polyline of the data coordinates (SVG's y axis points down,
    so the rendering is the mirror image of the mathematical orientation)."""
    xs = [x for _, x, _ in curve.samples]
    ys = [y for _, _, y in curve.samples]
    x0, x1 = _padded(min(xs), max(xs))
    y0, y1 = _padded(min(ys), max(ys))
    width = x1 - x0
    height = y1 - y0
    stroke = 0.004 * max(width, height)
    points = " ".join(f"{fmt12(x)},{fmt12(y)}" for _, x, y in curve.samples)
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{fmt12(x0)} {fmt12(y0)} {fmt12(width)} {fmt12(height)}">\n'
        f'  <polyline fill="none" stroke="black" stroke-width="{fmt12(stroke)}" '
        f'points="{points}"/>\n'
        "</svg>\n"
    )
