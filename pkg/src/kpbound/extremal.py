"""Numerical Kulkarni-Pinkall density through its extremal disk.

The KP density at ``z`` is the infimum of ``lambda_D(z) = r / (r^2 - |z - a|^2)``
over disks ``D(a, r)`` with ``z in D`` inside the domain.  For a fixed center
the objective decreases in ``r``, so only maximal disks matter:
``r = rho(a) = dist(a, boundary)``.  What remains is a two-dimensional search
over centers ``a`` with ``|z - a| < rho(a)``.

On a convex domain ``rho`` is concave, so the feasible set is convex and
``rho - |z - a|^2 / rho`` (the reciprocal of the objective) is concave; the
problem has a single basin.  A coarse grid picks seeds, Nelder-Mead refines
each of them, and the best result wins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .errors import ConvergenceError, ExteriorPointError
from .geometry import BoundaryPoint, Disk, Point2, as_point
from .metrics import MetricKind, MetricValue, Provenance
from .quadrature import segment_length

GRID = 64
SEEDS = 5
MAX_ITER = 500
OBJECTIVE_TOL = 1e-10
UNBOUNDED_BOX = 100.0
CONTACT_TOL = 1e-7
CONTACT_SAMPLES = 2048


@dataclass(frozen=True)
class ContactComponent:
    """A connected piece of ``boundary(D) & boundary(domain)``.

    ``points`` holds the single contact point, or ``(start, middle, end)`` for
    an arc.  ``angular_extent`` is measured on the disk's circle.
    """

    points: tuple[BoundaryPoint, ...]
    is_arc: bool
    angular_extent: float


@dataclass
class ExtremalDiskResult:
    disk: Disk
    density: MetricValue
    contact_points: list[BoundaryPoint]
    iterations: int
    converged: bool
    contact_components: list[ContactComponent] = field(default_factory=list)
    # density change when the search box of an unbounded domain is doubled
    truncation_error: float | None = None

    @property
    def has_arc_contact(self) -> bool:
        return any(c.is_arc for c in self.contact_components)


@dataclass(frozen=True)
class PathLengthResult:
    length: MetricValue
    samples: int
    estimated_error: float


def _objective(domain, zx: float, zy: float):
    def lam(a):
        ax, ay = float(a[0]), float(a[1])
        rho = domain.gap(ax, ay)
        s2 = (zx - ax) ** 2 + (zy - ay) ** 2
        den = rho * rho - s2
        if rho <= 0.0 or den <= 0.0:
            return math.inf
        return rho / den
    return lam


def _box_around(z: Point2, h: float):
    return z.x - h, z.x + h, z.y - h, z.y + h


def _refine(lam, seed: np.ndarray, step: float, tol: float, xtol: float):
    simplex = np.array([seed, seed + [step, 0.0], seed + [0.0, step]])
    res = minimize(lam, seed, method="Nelder-Mead",
                   options={"initial_simplex": simplex, "xatol": xtol, "fatol": tol,
                            "maxiter": MAX_ITER})
    iters = int(res.nit)
    best_x, best_f, ok = res.x, float(res.fun), bool(res.success)
    # restart from a small simplex: Nelder-Mead can stall on the kinks of rho
    for shrink in (1e-3, 1e-6):
        s = max(step * shrink, 10.0 * xtol)
        simplex = np.array([best_x, best_x + [s, 0.0], best_x + [0.0, s]])
        res = minimize(lam, best_x, method="Nelder-Mead",
                       options={"initial_simplex": simplex, "xatol": xtol, "fatol": tol,
                                "maxiter": MAX_ITER})
        iters += int(res.nit)
        ok = ok and bool(res.success)
        if float(res.fun) <= best_f:
            best_x, best_f = res.x, float(res.fun)
    return best_x, best_f, iters, ok


def _search(domain, z: Point2, rho_z: float, box, grid: int, seeds: int):
    """Grid seeds plus ``z`` itself, each refined; returns ``(lam, center, ok, iterations)``."""
    lam = _objective(domain, z.x, z.y)
    x0, x1, y0, y1 = box
    xs = x0 + (np.arange(grid) + 0.5) * (x1 - x0) / grid
    ys = y0 + (np.arange(grid) + 0.5) * (y1 - y0) / grid
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    centers = np.column_stack([gx.ravel(), gy.ravel()])
    rho = domain.gaps(centers)
    den = rho * rho - ((centers[:, 0] - z.x) ** 2 + (centers[:, 1] - z.y) ** 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.where((rho > 0.0) & (den > 0.0), rho / den, np.inf)
    order = np.lexsort((centers[:, 1], centers[:, 0], vals))
    picked = [centers[i] for i in order[:seeds] if np.isfinite(vals[i])]
    picked.append(np.array([z.x, z.y]))
    cell = min((x1 - x0), (y1 - y0)) / grid

    tol = OBJECTIVE_TOL / rho_z
    # simplex size at which coordinates stop being resolvable in floating point
    xtol = 1e-14 * max(abs(x0), abs(x1), abs(y0), abs(y1), rho_z)
    results = []
    total_iters = 0
    for seed in picked:
        rs = domain.gap(seed[0], seed[1])
        margin = rs - math.hypot(seed[0] - z.x, seed[1] - z.y)
        step = 0.5 * min(cell, margin) if margin > 0 else 0.25 * rho_z
        x, fval, iters, ok = _refine(lam, np.asarray(seed, dtype=float), step, tol, xtol)
        total_iters += iters
        if math.isfinite(fval):
            results.append((fval, x, ok))
    best_f = min(r[0] for r in results)
    # ties (within 1e-12) go to the larger disk, then lexicographic center
    tied = [r for r in results if r[0] <= best_f * (1.0 + 1e-12)]
    tied.sort(key=lambda r: (-domain.gap(r[1][0], r[1][1]), r[1][0], r[1][1]))
    fval, x, ok = tied[0]
    return fval, x, ok, total_iters


def extremal_disk(domain, z, *, grid: int = GRID, seeds: int = SEEDS,
                  contact_tol: float = CONTACT_TOL) -> ExtremalDiskResult:
    """The KP-extremal disk of ``domain`` at the interior point ``z``.

    Unbounded domains are searched in a box of half-width ``100 dist(z)``
    around ``z``; the search is repeated in a box twice as large and the
    density change is reported as ``truncation_error``.
    """
    z = as_point(z)
    rho_z = domain.distance(z)
    if rho_z <= 0.0:
        raise ExteriorPointError("the query point must be interior")
    box = domain.bbox()
    truncation = None
    if box is None:
        fval, x, ok, iters = _search(domain, z, rho_z, _box_around(z, UNBOUNDED_BOX * rho_z), grid, seeds)
        f2, x2, ok2, it2 = _search(domain, z, rho_z, _box_around(z, 2 * UNBOUNDED_BOX * rho_z), grid, seeds)
        truncation = abs(f2 - fval)
        iters += it2
        if f2 < fval:
            fval, x, ok = f2, x2, ok2
    else:
        fval, x, ok, iters = _search(domain, z, rho_z, box, grid, seeds)
    a = Point2(float(x[0]), float(x[1]))
    r = domain.gap(a.x, a.y)
    disk = Disk(a, r)
    density = MetricValue(r / (r * r - ((z.x - a.x) ** 2 + (z.y - a.y) ** 2)),
                          MetricKind.KP, Provenance.NUMERIC)
    comps = contact_set(domain, disk, tol=contact_tol)
    pts = [p for c in comps for p in c.points]
    return ExtremalDiskResult(disk, density, pts, iters, ok, comps, truncation)


def kp_density_numeric(domain, z) -> MetricValue:
    res = extremal_disk(domain, z)
    if not res.converged:
        raise ConvergenceError("extremal disk search hit its iteration cap",
                               {"iterations": res.iterations, "density": res.density.value})
    return res.density


def kp_length_numeric(domain, p0, p1, tol: float = 1e-6) -> PathLengthResult:
    """KP length of the straight segment ``[p0, p1]`` by adaptive quadrature."""
    a, b = as_point(p0).complex, as_point(p1).complex
    res = segment_length(lambda w: kp_density_numeric(domain, w).value, a, b, tol)
    return PathLengthResult(MetricValue(res.value, MetricKind.KP, Provenance.NUMERIC),
                            res.evaluations, res.error)


# --------------------------------------------------------------------------
# contact set


def _boundary_point(domain, p: complex) -> BoundaryPoint:
    g, n = domain.nearest_boundary((p.real, p.imag))
    w = Point2(p.real + g * n.x, p.imag + g * n.y)
    t = domain.locate(w).arclength_param if hasattr(domain, "locate") else math.nan
    return BoundaryPoint(w, t, Point2(-n.y, n.x))


def contact_set(domain, disk: Disk, tol: float = CONTACT_TOL,
                samples: int = CONTACT_SAMPLES) -> list[ContactComponent]:
    """Components of ``boundary(disk) & boundary(domain)`` up to a gap of ``tol``.

    The disk circle is sampled; runs of near-zero gap wide enough to exceed a
    quadratic tangency are arcs, and isolated gap minima are polished by a
    bounded scalar search before being accepted as point contacts.
    """
    c = disk.center.complex
    r = disk.radius
    dphi = 2.0 * math.pi / samples
    phis = np.arange(samples) * dphi
    circle = c + r * np.exp(1j * phis)
    gaps = domain.gaps(np.column_stack([circle.real, circle.imag]))

    def gap_at(phi: float) -> float:
        p = c + r * complex(math.cos(phi), math.sin(phi))
        return domain.gap(p.real, p.imag)

    below = gaps < tol
    comps: list[ContactComponent] = []
    if below.all():
        pts = tuple(_boundary_point(domain, c + r * np.exp(1j * a)) for a in (0.0, 2 * math.pi / 3, 4 * math.pi / 3))
        return [ContactComponent(pts, True, 2.0 * math.pi)]

    arc_min = max(8 * dphi, 4.0 * math.sqrt(2.0 * tol / r))
    used = np.zeros(samples, dtype=bool)
    if below.any():
        start = int(np.argmin(below))  # first index outside every run
        k = 0
        while k < samples:
            i = (start + k) % samples
            if not below[i]:
                k += 1
                continue
            run = []
            while k < samples and below[(start + k) % samples]:
                run.append((start + k) % samples)
                k += 1
            used[run] = True
            extent = (len(run) - 1) * dphi
            if extent >= arc_min:
                a0 = phis[run[0]]
                ends = (a0, a0 + 0.5 * extent, a0 + extent)
                pts = tuple(_boundary_point(domain, c + r * np.exp(1j * a)) for a in ends)
                comps.append(ContactComponent(pts, True, extent))
            else:
                mid = phis[run[len(run) // 2]]
                comps.append(_point_contact(domain, c, r, gap_at, mid, dphi * (len(run) + 1)))

    prev = np.roll(gaps, 1)
    nxt = np.roll(gaps, -1)
    minima = np.nonzero((gaps <= prev) & (gaps <= nxt) & ~used)[0]
    for i in minima:
        if gaps[i] > 100.0 * tol + (r * dphi) ** 2:
            continue
        res = minimize_scalar(gap_at, bounds=(phis[i] - dphi, phis[i] + dphi), method="bounded",
                              options={"xatol": 1e-13})
        if res.fun < tol:
            comps.append(_point_contact(domain, c, r, gap_at, float(res.x), 2 * dphi))
    comps.sort(key=lambda comp: math.atan2(comp.points[0].position.y - c.imag,
                                           comp.points[0].position.x - c.real) % (2 * math.pi))
    return comps


def _point_contact(domain, c, r, gap_at, phi: float, width: float) -> ContactComponent:
    res = minimize_scalar(gap_at, bounds=(phi - width, phi + width), method="bounded",
                          options={"xatol": 1e-13})
    p = c + r * complex(math.cos(res.x), math.sin(res.x))
    return ContactComponent((_boundary_point(domain, p),), False, 0.0)
