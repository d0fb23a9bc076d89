"""Adaptive Simpson quadrature with step-halving error estimates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError

MAX_DEPTH = 40


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error: float
    evaluations: int


def adaptive_simpson(f: Callable[[float], float], a: float, b: float, tol: float = 1e-8,
                     initial_panels: int = 8) -> QuadratureResult:
    """Integrate ``f`` over ``[a, b]`` to absolute tolerance ``tol``.

    Each panel is compared with its two halves; the difference (divided by
    15) is both the local error estimate and the Richardson correction.
    Function values are cached, so every abscissa is evaluated once.
    """
    cache: dict[float, float] = {}

    def fx(x: float) -> float:
        v = cache.get(x)
        if v is None:
            v = float(f(x))
            if not math.isfinite(v):
                raise ConvergenceError(f"integrand is not finite at {x}")
            cache[x] = v
        return v

    total = 0.0
    err = 0.0
    edges = [a + (b - a) * k / initial_panels for k in range(initial_panels + 1)]
    stack = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (lo + hi)
        whole = (hi - lo) / 6.0 * (fx(lo) + 4.0 * fx(mid) + fx(hi))
        stack.append((lo, hi, whole, tol / initial_panels, 0))
    while stack:
        lo, hi, whole, eps, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        left = (mid - lo) / 6.0 * (fx(lo) + 4.0 * fx(lm) + fx(mid))
        right = (hi - mid) / 6.0 * (fx(mid) + 4.0 * fx(rm) + fx(hi))
        diff = left + right - whole
        if abs(diff) <= 15.0 * eps or depth >= MAX_DEPTH:
            total += left + right + diff / 15.0
            err += abs(diff) / 15.0
        else:
            stack.append((mid, hi, right, 0.5 * eps, depth + 1))
            stack.append((lo, mid, left, 0.5 * eps, depth + 1))
    return QuadratureResult(total, err, len(cache))


def segment_length(density: Callable[[complex], float], p0: complex, p1: complex,
                   tol: float = 1e-8) -> QuadratureResult:
    """Length of the straight segment ``[p0, p1]`` in the metric ``density(z)|dz|``."""
    span = abs(p1 - p0)
    if span == 0.0:
        return QuadratureResult(0.0, 0.0, 0)
    res = adaptive_simpson(lambda t: density(p0 + t * (p1 - p0)), 0.0, 1.0, tol / span)
    return QuadratureResult(res.value * span, res.error * span, res.evaluations)
