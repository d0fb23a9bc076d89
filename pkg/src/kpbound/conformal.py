"""Conformal maps of the unit disk onto disks and stadium-type domains.

Two kinds of map handle share one interface:

* exact: the Moebius composition onto ``D(a, r)`` fixing 0;
* numeric: Riemann map of a bounded hull domain, computed through the Szego
  kernel.  The Szego kernel ``S(., 0)`` of the domain solves the second-kind
  Kerzman-Stein integral equation on the boundary,

      S(w) + int A(w, z) S(z) |dz| = conj(H(0, w)),

  with ``H(w, z) = T(z) / (2 pi i (z - w))`` the Cauchy kernel and
  ``A(w, z) = conj(H(z, w)) - H(w, z)`` (bounded and skew-hermitian).  The
  equation follows from ``C S = S`` and ``C* S = conj(H(0, .))`` for the
  Cauchy operator ``C``.  The map
  ``R`` of the domain onto the disk with ``R(0) = 0, R'(0) > 0`` then has
  ``R' = 2 pi S^2 / S(0, 0)``; the disk-to-domain map ``f`` is its inverse,
  so ``|f'| = S(0, 0) / (2 pi |S|^2)`` on the boundary.

The equation is discretized by Nystrom's method with Gauss-Legendre panels
broken at every arc/segment junction and graded toward them (the boundary is
only C^{1,1} there).  Interior values come from barycentric Cauchy sums,
which stay accurate close to the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import kernels
from .errors import ConvergenceError, InputDomainError
from .geometry import ArcPiece, Disk, Point2

GAUSS_ORDER = 16
GRADING_LEVELS = 6
DEFAULT_RESOLUTION = 1024
_GL_X, _GL_W = np.polynomial.legendre.leggauss(GAUSS_ORDER)
# barycentric interpolation weights for the Gauss-Legendre nodes
_GL_BARY = (-1.0) ** np.arange(GAUSS_ORDER) * np.sqrt((1.0 - _GL_X ** 2) * _GL_W)


@dataclass
class ConformalMapHandle:
    """A conformal map ``f`` of the unit disk onto ``domain`` with ``f(0) = 0``.

    ``evaluate`` and ``derivative`` accept complex scalars or arrays in the
    closed unit disk.
    """

    domain: object
    evaluate: Callable
    derivative: Callable
    kind: str
    resolution: int | None = None
    diagnostics: dict = field(default_factory=dict)
    # boundary sup of |f'| when known in closed form
    analytic_sup: float | None = None
    # inverse map (domain -> disk) and its derivative, when available
    inverse: Callable | None = None
    inverse_derivative: Callable | None = None
    boundary_derivative: Callable | None = None


# --------------------------------------------------------------------------
# exact maps onto disks


def exact_disk_map(a: float, r: float) -> ConformalMapHandle:
    """``f3 o f2 o f1`` onto ``D(a, r)``: Moebius shift, translation by ``a/r``, scaling by ``r``."""
    if not (math.isfinite(r) and r > 0.0):
        raise InputDomainError(f"radius must be positive, got {r}")
    if not (math.isfinite(a) and 0.0 <= a < r):
        raise InputDomainError(f"need 0 <= a < r, got a={a}, r={r}")
    alpha = a / r

    def f(z):
        z = np.asarray(z, dtype=complex)
        return r * ((z - alpha) / (1.0 - alpha * z) + alpha)

    def df(z):
        z = np.asarray(z, dtype=complex)
        return r * (1.0 - alpha * alpha) / (1.0 - alpha * z) ** 2

    def g(w):
        u = np.asarray(w, dtype=complex) / r - alpha
        return (u + alpha) / (1.0 + alpha * u)

    def dg(w):
        u = np.asarray(w, dtype=complex) / r - alpha
        return (1.0 - alpha * alpha) / (r * (1.0 + alpha * u) ** 2)

    return ConformalMapHandle(
        domain=Disk(Point2(a, 0.0), r),
        evaluate=f,
        derivative=df,
        kind="exact_mobius",
        analytic_sup=r * (r + a) / (r - a),
        inverse=g,
        inverse_derivative=dg,
        boundary_derivative=lambda zeta: np.abs(df(zeta)),
    )


# --------------------------------------------------------------------------
# boundary discretization


@dataclass
class BoundaryQuadrature:
    nodes: np.ndarray       # complex positions
    tangents: np.ndarray    # complex unit tangents
    weights: np.ndarray     # arclength weights
    params: np.ndarray      # arclength along the piece chain (not start-aligned)
    edges: np.ndarray       # panel breakpoints on the same chain parameter

    @property
    def size(self) -> int:
        return self.nodes.shape[0]


def _panel_breaks(length: float, h: float, graded: bool) -> list[float]:
    n = max(2, math.ceil(length / h))
    breaks = list(np.linspace(0.0, length, n + 1))
    if graded:
        first, last = breaks[1], breaks[-2]
        head = [first * 0.5 ** k for k in range(1, GRADING_LEVELS + 1)]
        tail = [length - (length - last) * 0.5 ** k for k in range(1, GRADING_LEVELS + 1)]
        breaks = sorted(set(breaks + head + tail))
    return breaks


def boundary_quadrature(domain, resolution: int) -> BoundaryQuadrature:
    """Composite Gauss-Legendre rule on the boundary pieces of a hull domain.

    ``resolution`` is the target node count before grading.
    """
    if resolution < 64:
        raise InputDomainError("resolution must be at least 64")
    pieces = domain.pieces
    perimeter = sum(p.length for p in pieces)
    h = perimeter / max(1, resolution // GAUSS_ORDER)
    graded = len(pieces) > 1
    nodes, tans, wts, prm, edges = [], [], [], [], []
    offset = 0.0
    for piece in pieces:
        breaks = _panel_breaks(piece.length, h, graded)
        edges.extend(offset + b for b in breaks[:-1])
        for s0, s1 in zip(breaks[:-1], breaks[1:]):
            half = 0.5 * (s1 - s0)
            s = s0 + half * (_GL_X + 1.0)
            p, t = piece.evaluate(s)
            nodes.append(p)
            tans.append(t)
            wts.append(half * _GL_W)
            prm.append(offset + s)
        offset += piece.length
    edges.append(offset)
    return BoundaryQuadrature(np.concatenate(nodes), np.concatenate(tans),
                              np.concatenate(wts), np.concatenate(prm), np.array(edges))


# --------------------------------------------------------------------------
# Szego-kernel solve


@dataclass
class SzegoSolution:
    quad: BoundaryQuadrature
    szego: np.ndarray          # S(z_j, 0) at the nodes
    szego_00: float            # S(0, 0)
    base: complex

    def rhs(self, w, tangent_w):
        return np.conj(tangent_w / (2j * math.pi * (w - self.base)))

    def szego_at_params(self, chain_s):
        """``S(., 0)`` at chain parameters by Lagrange interpolation on each panel.

        Panels never straddle an arc/segment junction, so ``S`` is smooth on
        each and the interpolant is spectrally accurate.
        """
        q = self.quad
        s = np.atleast_1d(np.asarray(chain_s, dtype=float))
        k = np.clip(np.searchsorted(q.edges, s, side="right") - 1, 0, q.edges.size - 2)
        lo, hi = q.edges[k], q.edges[k + 1]
        x = (2.0 * s - lo - hi) / (hi - lo)
        vals = self.szego.reshape(-1, GAUSS_ORDER)[k]
        diff = x[:, None] - _GL_X[None, :]
        hit = diff == 0.0
        c = _GL_BARY[None, :] / np.where(hit, 1.0, diff)
        out = (c * vals).sum(axis=1) / c.sum(axis=1)
        rows, cols = np.nonzero(hit)
        out[rows] = vals[rows, cols]
        return out

    def szego_on_boundary(self, w, tangent_w):
        """Nystrom interpolation of ``S(., 0)`` at arbitrary boundary points."""
        w = np.ascontiguousarray(np.atleast_1d(w).astype(complex))
        tw = np.ascontiguousarray(np.atleast_1d(tangent_w).astype(complex))
        q = self.quad
        corr = kernels.kerzman_stein_apply(w, tw, q.nodes, q.tangents,
                                           q.weights.astype(complex), self.szego)
        return self.rhs(w, tw) - corr


def solve_szego(domain, resolution: int, base: complex = 0.0) -> SzegoSolution:
    quad = boundary_quadrature(domain, resolution)
    sw = np.sqrt(quad.weights)
    system = kernels.kerzman_stein_system(quad.nodes, quad.tangents, sw.astype(complex))
    rhs = np.conj(quad.tangents / (2j * math.pi * (quad.nodes - base)))
    x = np.linalg.solve(system, sw * rhs)
    residual = float(np.linalg.norm(system @ x - sw * rhs) / np.linalg.norm(sw * rhs))
    szego = x / sw
    s00 = float(np.sum(quad.weights * np.abs(szego) ** 2))
    sol = SzegoSolution(quad, szego, s00, complex(base))
    sol.residual = residual
    return sol


# --------------------------------------------------------------------------
# numeric map handle


def numeric_conformal_map(domain, resolution: int = DEFAULT_RESOLUTION,
                          check_tol: float = 1e-6) -> ConformalMapHandle:
    """Numerical Riemann map of the unit disk onto a bounded hull domain.

    Normalized by ``f(0) = 0`` and ``f'(0) > 0``.  Raises
    :class:`ConvergenceError` when the discrete solution fails its
    self-checks (linear residual, Cauchy reproduction of ``S(0, 0)``,
    monotone boundary correspondence, ``f(0) = 0``).
    """
    if not hasattr(domain, "pieces"):
        raise InputDomainError(f"numeric maps need a bounded hull domain, got {type(domain).__name__}")
    if not domain.contains((0.0, 0.0)):
        raise InputDomainError("the domain must contain the origin")
    sol = solve_szego(domain, resolution)
    q = sol.quad
    s = sol.szego
    s00 = sol.szego_00
    dz = q.tangents * q.weights
    # boundary values of R (on the unit circle) and of R'
    r_bd = s * s * q.tangents / (1j * np.abs(s) ** 2)
    dr_bd = 2.0 * math.pi * s * s / s00
    dt = dr_bd * dz

    s00_cauchy = np.sum(s * dz / (2j * math.pi * (q.nodes - sol.base)))
    angles = np.unwrap(np.angle(r_bd))
    steps = np.diff(np.concatenate([angles, [angles[0] + 2.0 * math.pi]]))
    diagnostics = {
        "nodes": q.size,
        "linear_residual": sol.residual,
        "szego_00": s00,
        "szego_00_cauchy_error": float(abs(s00_cauchy - s00) / s00),
        "total_angle_error": float(abs(angles[-1] - angles[0] + steps[-1] - 2.0 * math.pi)),
        "min_angle_step": float(steps.min()),
    }

    def _bary(targets, nodes, dnodes, values):
        t = np.ascontiguousarray(np.atleast_1d(np.asarray(targets, dtype=complex)).ravel())
        vals = np.ascontiguousarray(np.atleast_2d(values).astype(complex))
        return kernels.cauchy_barycentric(t, nodes, dnodes, vals)

    shape_of = lambda z: np.shape(np.asarray(z))

    def f(zeta):
        out = _bary(zeta, r_bd, dt, q.nodes[None, :])[0]
        return out.reshape(shape_of(zeta)) if shape_of(zeta) else out[0]

    def df(zeta):
        out = _bary(zeta, r_bd, dt, (1.0 / dr_bd)[None, :])[0]
        return out.reshape(shape_of(zeta)) if shape_of(zeta) else out[0]

    def g(w):
        out = _bary(w, q.nodes, dz, r_bd[None, :])[0]
        return out.reshape(shape_of(w)) if shape_of(w) else out[0]

    def dg(w):
        sv = _bary(w, q.nodes, dz, s[None, :])[0]
        out = 2.0 * math.pi * sv * sv / s00
        return out.reshape(shape_of(w)) if shape_of(w) else out[0]

    def boundary_derivative(t):
        """``|f'|`` at the boundary points with arclength parameters ``t``."""
        geom = domain._geom
        chain = np.mod(np.asarray(t, dtype=float) + geom.start_offset, geom.perimeter)
        sv = sol.szego_at_params(chain)
        return s00 / (2.0 * math.pi * np.abs(sv) ** 2)

    diagnostics["f0"] = float(abs(f(0.0)))
    handle = ConformalMapHandle(
        domain=domain,
        evaluate=f,
        derivative=df,
        kind="numeric",
        resolution=resolution,
        diagnostics=diagnostics,
        inverse=g,
        inverse_derivative=dg,
        boundary_derivative=boundary_derivative,
    )
    handle.szego = sol
    failures = []
    if diagnostics["linear_residual"] > 1e-10:
        failures.append("linear residual")
    if diagnostics["szego_00_cauchy_error"] > check_tol:
        failures.append("Cauchy reproduction of S(0,0)")
    if diagnostics["min_angle_step"] <= 0.0:
        failures.append("non-monotone boundary correspondence")
    if diagnostics["f0"] > max(check_tol, 1e-8) * domain.scale:
        failures.append("normalization f(0) = 0")
    if failures:
        raise ConvergenceError("numeric conformal map failed: " + ", ".join(failures), diagnostics)
    return handle
