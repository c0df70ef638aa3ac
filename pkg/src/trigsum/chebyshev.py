"""Chebyshev polynomials of the second kind and the stable sine-ratio form.

U_n satisfies U_n(cos a) * sin a = sin((n+1) a). The polynomial values are
total in the angle, which makes them the safe evaluation route wherever
sin a vanishes; the direct quotient sin(n a)/sin a is preferred elsewhere.
"""

from __future__ import annotations

import math
from typing import Union

import numpy as np

from .angle import Angle, as_angle
from .errors import DegreeTooLarge

#: Evaluation is O(degree); degrees above this are rejected.
MAX_DEGREE = 10**6

#: |sin a| below which sin_ratio switches from the direct quotient to the
#: polynomial branch. The quotient loses digits as 1/|sin a| while the
#: polynomial branch stays stable there (its error grows with n instead).
SIN_RATIO_SWITCH = 1e-4

FloatOrArray = Union[float, np.ndarray]


def chebyshev_u(degree: int, x: FloatOrArray, *, max_degree: int = MAX_DEGREE) -> FloatOrArray:
    """Evaluate U_degree(x) by the three-term recurrence.

    U_0 = 1, U_1 = 2x, U_{j+1} = 2x U_j - U_{j-1}. Defined for all real x;
    accepts a scalar or an ndarray, and the return type matches the input.
    """
    _check_degree(degree, max_degree)
    if isinstance(x, np.ndarray):
        u_prev: FloatOrArray = np.ones_like(x, dtype=float)
    else:
        x = float(x)
        u_prev = 1.0
    if degree == 0:
        return u_prev
    u = 2.0 * x
    for _ in range(degree - 1):
        u_prev, u = u, 2.0 * x * u - u_prev
    return u


def u_sequence(max_deg: int, x: FloatOrArray, *, max_degree: int = MAX_DEGREE) -> list:
    """Return [U_0(x), ..., U_max_deg(x)] from a single recurrence pass.

    Sweeps that need every degree up to a bound should use this instead of
    calling chebyshev_u per degree, which would repeat the whole recurrence.
    """
    _check_degree(max_deg, max_degree)
    if isinstance(x, np.ndarray):
        values: list = [np.ones_like(x, dtype=float)]
    else:
        x = float(x)
        values = [1.0]
    if max_deg == 0:
        return values
    values.append(2.0 * x)
    for _ in range(max_deg - 1):
        values.append(2.0 * x * values[-1] - values[-2])
    return values


def sin_ratio(n: int, alpha: Angle | float) -> float:
    """sin(n a) / sin(a), evaluated by whichever branch is stable at a.

    Below SIN_RATIO_SWITCH the quotient would amplify rounding as
    1/|sin a|, so the polynomial branch U_{n-1}(cos a) takes over; the two
    agree wherever both are well conditioned.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rad = as_angle(alpha).radians
    s = math.sin(rad)
    if abs(s) < SIN_RATIO_SWITCH:
        return float(chebyshev_u(n - 1, math.cos(rad)))
    return math.sin(n * rad) / s


def _check_degree(degree: int, max_degree: int) -> None:
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if degree > max_degree:
        raise DegreeTooLarge(f"degree {degree} exceeds the configured maximum {max_degree}")
