"""Default comparison tolerances for float-mode checks."""
from __future__ import annotations

import math

RTOL = 1e-10
ATOL = 1e-14


def within(residual: float, scale: float = 1.0, rtol: float = RTOL, atol: float = ATOL) -> bool:
    return residual <= max(atol, rtol * abs(scale))


def mv_close(a, b, rtol: float = RTOL, atol: float = ATOL) -> bool:
    return within((a - b).norm(), max(a.norm(), b.norm()), rtol, atol)


def finite(x: float) -> bool:
    return math.isfinite(x)
