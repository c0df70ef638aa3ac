"""Closed-form cosine summation kernels, brute-force oracles, and a dispatcher.

Three index families of partial cosine sums are supported:

  full  sum of cos(l*phi)       for l = 1..m
  even  sum of cos(2*l*alpha)   for l = 1..k
  odd   sum of cos((2l-1)*alpha) for l = 1..k

Each family has a closed form whose denominator (sin(phi/2) or sin(phi) or
sin(alpha)) vanishes on a measure-zero singular set; near it the closed form
amplifies rounding error like 1/|denominator|, so sum_auto falls back to the
literal term-by-term sum when the denominator magnitude drops below a policy
threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .angle import Angle, as_angle
from .errors import SingularDenominator

#: Fallback/guard threshold on the denominator magnitude. At 1e-4 a closed
#: form still carries roughly 12 good digits, and the O(m) naive path is only
#: paid on the thin slices around the singular angles.
DEFAULT_THRESHOLD = 1e-4


class Family(Enum):
    """Index family of the requested sum."""

    FULL = "full"
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class SumSpec:
    """A requested cosine sum: family, term count, and the angle argument."""

    angle: Angle
    count: int
    family: Family = Family.FULL

    def __post_init__(self) -> None:
        object.__setattr__(self, "angle", as_angle(self.angle))
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")


class Method(Enum):
    CLOSED_FORM = "ClosedForm"
    NAIVE_FALLBACK = "NaiveFallback"


@dataclass(frozen=True)
class SumValue:
    """An evaluated sum with method provenance.

    singular_proximity is the magnitude of the denominator the closed form
    would divide by; method is NaiveFallback exactly when it was below the
    policy threshold at dispatch time.
    """

    value: float
    method: Method
    singular_proximity: float


def _multiples(spec: SumSpec) -> range:
    """Angle multipliers of the family, in increasing order."""
    if spec.family is Family.FULL:
        return range(1, spec.count + 1)
    if spec.family is Family.EVEN:
        return range(2, 2 * spec.count + 1, 2)
    return range(1, 2 * spec.count, 2)


def naive_trig_sum(spec: SumSpec) -> float:
    """Literal term-by-term oracle, plain accumulation in index order.

    Error grows like count * eps, which every comparison tolerance budgets
    for; use compensated_trig_sum when the oracle itself is under test.
    """
    rad = spec.angle.radians
    total = 0.0
    for mult in _multiples(spec):
        total += math.cos(mult * rad)
    return total


def compensated_trig_sum(spec: SumSpec) -> float:
    """Exactly rounded sum of the same terms (verification-grade oracle)."""
    rad = spec.angle.radians
    return math.fsum(math.cos(mult * rad) for mult in _multiples(spec))


def _guard(den: float, threshold: float, what: str) -> None:
    # den == 0.0 is checked separately so threshold=0.0 still rejects the
    # exact singularity instead of dividing by zero.
    if abs(den) < threshold or den == 0.0:
        raise SingularDenominator(
            f"|{what}| = {abs(den):.3e} is below threshold {threshold:.3e}"
        )


def lagrange_sum(
    phi: Angle | float, m: int, *, threshold: float = DEFAULT_THRESHOLD
) -> float:
    """Closed form with a half-angle denominator for the full family.

    Returns (sin((m + 1/2) phi) / sin(phi/2) - 1) / 2; singular where
    sin(phi/2) vanishes (phi near 0 or 2 pi), regular at phi = pi.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    rad = as_angle(phi).radians
    den = math.sin(0.5 * rad)
    _guard(den, threshold, "sin(phi/2)")
    return 0.5 * (math.sin((m + 0.5) * rad) / den - 1.0)


def halfangle_free_sum(
    phi: Angle | float, m: int, *, threshold: float = DEFAULT_THRESHOLD
) -> float:
    """Closed form for the full family using whole-angle sines only.

    Returns ((sin((m+1) phi) + sin(m phi)) / sin(phi) - 1) / 2; singular
    where sin(phi) vanishes, so phi near 0, pi, and 2 pi are all excluded
    and left to the dispatcher's fallback.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    rad = as_angle(phi).radians
    den = math.sin(rad)
    _guard(den, threshold, "sin(phi)")
    return 0.5 * ((math.sin((m + 1) * rad) + math.sin(m * rad)) / den - 1.0)


def even_index_sum(
    alpha: Angle | float, k: int, *, threshold: float = DEFAULT_THRESHOLD
) -> float:
    """Closed form of sum cos(2 l alpha), l = 1..k.

    Returns (sin((2k+1) alpha) / sin(alpha) - 1) / 2.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    rad = as_angle(alpha).radians
    den = math.sin(rad)
    _guard(den, threshold, "sin(alpha)")
    return 0.5 * (math.sin((2 * k + 1) * rad) / den - 1.0)


def odd_index_sum(
    alpha: Angle | float, k: int, *, threshold: float = DEFAULT_THRESHOLD
) -> float:
    """Closed form of sum cos((2l-1) alpha), l = 1..k.

    Returns sin(2 k alpha) / sin(alpha) / 2.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    rad = as_angle(alpha).radians
    den = math.sin(rad)
    _guard(den, threshold, "sin(alpha)")
    return 0.5 * math.sin(2 * k * rad) / den


def x_coordinate_identity(
    alpha: Angle | float, k: int, *, threshold: float = DEFAULT_THRESHOLD
) -> tuple[float, float]:
    """Both sides of the terminal-abscissa identity, evaluated independently.

    The signed x-projections of the first 2k+2 unit segments of the
    construction sum to 1 + 2(cos 2a + ... + cos 2ka) + cos((2k+2) a); the
    telescoped endpoint abscissa is cos(a) sin((2k+2) a) / sin(a). Returns
    (lhs by direct accumulation, rhs by closed form); callers assert their
    agreement. k = 0 is allowed and collapses the middle sum.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    rad = as_angle(alpha).radians
    lhs = 1.0
    for l in range(1, k + 1):
        lhs += 2.0 * math.cos(2 * l * rad)
    lhs += math.cos((2 * k + 2) * rad)
    den = math.sin(rad)
    _guard(den, threshold, "sin(alpha)")
    rhs = math.cos(rad) * math.sin((2 * k + 2) * rad) / den
    return lhs, rhs


def sum_auto(
    spec: SumSpec,
    *,
    threshold: float = DEFAULT_THRESHOLD,
    full_form: str = "halfangle",
) -> SumValue:
    """Evaluate a sum by closed form, or by the oracle near its singularity.

    full_form selects the closed form for the full family ("halfangle" or
    "lagrange"); the even/odd families have one form each. Total over finite
    inputs: when the relevant denominator magnitude is below threshold the
    literal sum is returned with method=NaiveFallback.
    """
    if threshold <= 0.0:
        raise ValueError(f"threshold must be > 0, got {threshold}")
    if full_form not in ("halfangle", "lagrange"):
        raise ValueError(f"full_form must be 'halfangle' or 'lagrange', got {full_form!r}")
    rad = spec.angle.radians
    if spec.family is Family.FULL and full_form == "lagrange":
        proximity = abs(math.sin(0.5 * rad))
    else:
        proximity = abs(math.sin(rad))
    if proximity < threshold:
        return SumValue(naive_trig_sum(spec), Method.NAIVE_FALLBACK, proximity)
    if spec.family is Family.FULL:
        if full_form == "lagrange":
            value = lagrange_sum(spec.angle, spec.count, threshold=threshold)
        else:
            value = halfangle_free_sum(spec.angle, spec.count, threshold=threshold)
    elif spec.family is Family.EVEN:
        value = even_index_sum(spec.angle, spec.count, threshold=threshold)
    else:
        value = odd_index_sum(spec.angle, spec.count, threshold=threshold)
    return SumValue(value, Method.CLOSED_FORM, proximity)
