"""End-to-end checks of the derivative bound against explicit conformal maps.

``sup |f'|`` over the unit disk is attained on the circle (maximum
principle), so it is estimated from dense boundary samples, refined around
the largest one, with a few concentric interior circles as a sanity check.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from . import _accel
from .bounds import main_bound
from .conformal import DEFAULT_RESOLUTION, ConformalMapHandle, exact_disk_map, numeric_conformal_map
from .errors import ConvergenceError, ExteriorPointError, InputDomainError
from .extremal import extremal_disk
from .geometry import Disk, Point2, RadiiTriple, as_point, construct_canonical_domain, require_valid
from .metrics import hyperbolic_distance_disk_radial

BOUND_RTOL = 1e-3
SANDWICH_TOL = 0.02
DISTANCE_TOL = 1e-3
DEFAULT_SAMPLES = 4096
REFINE_FACTOR = 4
INTERIOR_RADII = (0.5, 0.9, 0.99, 0.999)

SWEEP_HEADER = ("R_O", "R_I", "R_C", "F", "case", "new_bound", "old_bound",
                "empirical_sup", "margin", "pass")


@dataclass(frozen=True)
class SupEstimate:
    value: float
    samples: int
    # where the maximum sits: a disk angle for exact maps, a boundary arclength otherwise
    location: float
    analytic_sup: float | None = None
    interior_max: float = 0.0


def _refined_max(g, grid: np.ndarray, vals: np.ndarray, period: float) -> tuple[float, float, int]:
    """Resample ``g`` 4x finer around the largest sample, then polish with a scalar search."""
    k = int(np.argmax(vals))
    h = period / grid.size
    fine = grid[k] + np.linspace(-h, h, 2 * REFINE_FACTOR + 1)
    fvals = np.asarray(g(fine % period), dtype=float)
    j = int(np.argmax(fvals))
    res = minimize_scalar(lambda t: -float(np.asarray(g(np.array([t % period])))[0]),
                          bounds=(fine[j] - h / REFINE_FACTOR, fine[j] + h / REFINE_FACTOR),
                          method="bounded", options={"xatol": 1e-12 * period})
    best = max(float(vals[k]), float(fvals[j]), -float(res.fun))
    loc = float(res.x % period) if -res.fun >= fvals[j] else float(fine[j] % period)
    return best, loc, fine.size + int(res.nfev)


def empirical_sup_derivative(fmap: ConformalMapHandle, n_boundary_samples: int = DEFAULT_SAMPLES) -> SupEstimate:
    """Largest observed ``|f'|`` over the closed unit disk."""
    if n_boundary_samples < 8:
        raise InputDomainError("need at least 8 boundary samples")
    if fmap.kind == "numeric":
        diag = fmap.diagnostics
        if diag.get("min_angle_step", 1.0) <= 0.0:
            raise ConvergenceError("boundary correspondence is not monotone", diag)
        period = fmap.domain.perimeter
        g = fmap.boundary_derivative
    else:
        period = 2.0 * math.pi
        g = lambda phi: np.abs(fmap.derivative(np.exp(1j * np.asarray(phi))))
    grid = np.arange(n_boundary_samples) * (period / n_boundary_samples)
    vals = np.asarray(g(grid), dtype=float)
    best, loc, extra = _refined_max(g, grid, vals, period)

    phis = np.arange(n_boundary_samples // 4) * (2.0 * math.pi / (n_boundary_samples // 4))
    ring = np.concatenate([rho * np.exp(1j * phis) for rho in INTERIOR_RADII])
    inner = float(np.max(np.abs(fmap.derivative(ring))))
    return SupEstimate(max(best, inner), n_boundary_samples + extra + ring.size, loc,
                       fmap.analytic_sup, inner)


# --------------------------------------------------------------------------
# main bound


@dataclass
class VerificationReport:
    domain: dict
    bound_value: float
    empirical_sup: float
    margin: float
    samples: int
    method: str
    passed: bool
    triple: RadiiTriple | None = None
    f_value: float | None = None
    case: str | None = None
    old_bound: float | None = None
    resolution: int | None = None
    # |sup(2N) - sup(N)| from a resolution-doubling rerun, when requested
    error_estimate: float | None = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "domain": self.domain,
            "bound_value": self.bound_value,
            "empirical_sup": self.empirical_sup,
            "margin": self.margin,
            "samples": self.samples,
            "method": self.method,
            "status": self.status,
            "triple": self.triple.to_dict() if self.triple else None,
            "f_value": self.f_value,
            "case": self.case,
            "old_bound": self.old_bound,
            "resolution": self.resolution,
            "error_estimate": self.error_estimate,
        }

    def csv_row(self) -> tuple:
        t = self.triple
        return (t.r_outer, t.r_inner, t.r_curv, self.f_value, self.case, self.bound_value,
                self.old_bound, self.empirical_sup, self.margin, self.status)


def check_main_bound(triple: RadiiTriple, resolution: int = DEFAULT_RESOLUTION,
                     n_boundary_samples: int = DEFAULT_SAMPLES,
                     estimate_error: bool = True) -> VerificationReport:
    """Numerically map the disk onto the canonical domain and compare ``sup |f'|`` with the bound."""
    require_valid(triple)
    report = main_bound(triple)
    domain = construct_canonical_domain(triple)
    fmap = numeric_conformal_map(domain, resolution)
    est = empirical_sup_derivative(fmap, n_boundary_samples)
    err = None
    if estimate_error:
        fine = numeric_conformal_map(domain, 2 * resolution)
        err = abs(empirical_sup_derivative(fine, n_boundary_samples).value - est.value)
    bound = report.new_bound
    return VerificationReport(
        domain=domain.to_dict(),
        bound_value=bound,
        empirical_sup=est.value,
        margin=bound - est.value,
        samples=est.samples,
        method=fmap.kind,
        passed=est.value <= bound * (1.0 + BOUND_RTOL),
        triple=triple,
        f_value=report.f_value,
        case=report.case_branch.tag.value,
        old_bound=report.old_bound,
        resolution=resolution,
        error_estimate=err,
        diagnostics=dict(fmap.diagnostics),
    )


def _workers() -> int:
    cap = _accel.configure_threads()
    return cap if cap is not None else (os.cpu_count() or 1)


def verify_sweep(triples, resolution: int = DEFAULT_RESOLUTION, workers: int | None = None,
                 estimate_error: bool = False) -> list[VerificationReport]:
    """``check_main_bound`` over many triples; results keep the input order."""
    triples = list(triples)
    workers = workers or _workers()
    run = lambda t: check_main_bound(t, resolution, estimate_error=estimate_error)
    if workers <= 1 or len(triples) <= 1:
        return [run(t) for t in triples]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, triples))


# --------------------------------------------------------------------------
# metric comparisons


def _default_map(domain, resolution: int) -> ConformalMapHandle:
    if isinstance(domain, Disk) and domain.center.y == 0.0 and 0.0 <= domain.center.x < domain.radius:
        return exact_disk_map(domain.center.x, domain.radius)
    if not hasattr(domain, "pieces"):
        raise InputDomainError(f"no conformal map available for {type(domain).__name__}")
    return numeric_conformal_map(domain, resolution)


def hyperbolic_density_via_map(fmap: ConformalMapHandle, w) -> float:
    """``lambda_domain(w) = |g'(w)| / (1 - |g(w)|^2)`` with ``g`` the inverse map."""
    w = as_point(w).complex
    zeta = complex(fmap.inverse(w))
    if abs(zeta) >= 1.0:
        raise ExteriorPointError(f"{w} maps outside the unit disk")
    return abs(complex(fmap.inverse_derivative(w))) / (1.0 - abs(zeta) ** 2)


@dataclass
class SandwichReport:
    point: Point2
    hyperbolic: float
    kp: float
    quasihyperbolic: float
    checks: dict
    tolerance: float

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"point": list(self.point), "hyperbolic": self.hyperbolic, "kp": self.kp,
                "quasihyperbolic": self.quasihyperbolic, "checks": dict(self.checks),
                "tolerance": self.tolerance, "status": "PASS" if self.passed else "FAIL"}


def sandwich_check(domain, z, fmap: ConformalMapHandle | None = None,
                   tol: float = SANDWICH_TOL, resolution: int = DEFAULT_RESOLUTION) -> SandwichReport:
    """``mu/2 <= lambda <= mu`` and ``lambda <= 1/dist`` at ``z``, each up to ``tol`` relative."""
    z = as_point(z)
    dist = domain.distance(z)
    if dist <= 0.0:
        raise ExteriorPointError(f"{z} is not interior")
    fmap = fmap or _default_map(domain, resolution)
    lam = hyperbolic_density_via_map(fmap, z)
    mu = extremal_disk(domain, z).density.value
    qh = 1.0 / dist
    checks = {
        "half_kp_le_hyperbolic": 0.5 * mu <= lam * (1.0 + tol),
        "hyperbolic_le_kp": lam <= mu * (1.0 + tol),
        "hyperbolic_le_quasihyperbolic": lam <= qh * (1.0 + tol),
    }
    return SandwichReport(z, lam, mu, qh, checks, tol)


@dataclass
class DistanceBoundReport:
    triple: RadiiTriple
    center: Point2
    hyperbolic_distance: float
    f_value: float
    passed: bool

    def to_dict(self) -> dict:
        return {"triple": self.triple.to_dict(), "center": list(self.center),
                "hyperbolic_distance": self.hyperbolic_distance, "f_value": self.f_value,
                "status": "PASS" if self.passed else "FAIL"}


def check_distance_bound(triple: RadiiTriple, a, resolution: int = DEFAULT_RESOLUTION,
                         fmap: ConformalMapHandle | None = None) -> DistanceBoundReport:
    """``h(0, a) <= F`` for a center ``a`` of an ``R_C``-disk inside the canonical domain."""
    require_valid(triple)
    a = as_point(a)
    domain = construct_canonical_domain(triple)
    rc = triple.r_curv
    if domain.distance(a) < rc * (1.0 - 1e-9):
        raise InputDomainError(f"D({tuple(a)}, {rc:g}) is not contained in the canonical domain")
    fmap = fmap or numeric_conformal_map(domain, resolution)
    # g(0) = 0, so the distance is the radial one in the unit disk
    h = hyperbolic_distance_disk_radial(1.0, abs(complex(fmap.inverse(a.complex)))).value
    f = main_bound(triple).f_value
    return DistanceBoundReport(triple, a, h, f, h <= f + DISTANCE_TOL)
