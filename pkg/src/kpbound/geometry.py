"""Planar convex domains: disks, stadiums, strips, sectors, disk-union domains.

Every bounded domain here is the convex hull of one or two disks, so the
boundary is a closed curve made of circular arcs joined by tangent segments.
Boundaries are parameterized by arclength, counterclockwise, starting at the
rightmost boundary point (lowest one if the rightmost set is a vertical
segment).

All domains expose the same duck-typed surface used by the rest of the
package:

``distance(z)``          distance from a point of the closed domain to the boundary
``gaps(points)``         signed support gaps for an (n, 2) array (positive inside)
``nearest_boundary(z)``  ``(distance, outward unit normal)``
``contains(z)``          membership in the open domain
``bbox()``               ``(xmin, xmax, ymin, ymax)`` or ``None`` if unbounded
``scale``                a characteristic length
``to_dict()``            JSON-ready description
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Union

import numpy as np

from . import kernels
from .errors import (
    DomainRepresentationError,
    ExteriorPointError,
    InputDomainError,
    InvalidRadiiError,
)

TWO_PI = 2.0 * math.pi
_EXTERIOR_TOL = 1e-12
_RADII_SLACK = 1e-12


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InputDomainError(f"non-finite point ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y

    @property
    def complex(self) -> complex:
        return complex(self.x, self.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


PointLike = Union[Point2, tuple, list, complex, np.ndarray]


def as_point(z: PointLike) -> Point2:
    if isinstance(z, Point2):
        return z
    if isinstance(z, complex):
        return Point2(z.real, z.imag)
    x, y = z
    return Point2(float(x), float(y))


@dataclass(frozen=True)
class BoundaryPoint:
    position: Point2
    arclength_param: float
    unit_tangent: Point2

    @property
    def outward_normal(self) -> Point2:
        # counterclockwise traversal: the outward normal is the tangent turned clockwise
        return Point2(self.unit_tangent.y, -self.unit_tangent.x)


# --------------------------------------------------------------------------
# radii triples


@dataclass(frozen=True)
class RadiiTriple:
    """Outer, inner and curvature radii ``(R_O, R_I, R_C)`` of a domain about 0."""

    r_outer: float
    r_inner: float
    r_curv: float

    def __iter__(self):
        yield self.r_outer
        yield self.r_inner
        yield self.r_curv

    def to_dict(self) -> dict:
        return {"r_outer": self.r_outer, "r_inner": self.r_inner, "r_curv": self.r_curv}

    @classmethod
    def from_dict(cls, d: dict) -> "RadiiTriple":
        return cls(float(d["r_outer"]), float(d["r_inner"]), float(d["r_curv"]))


@dataclass(frozen=True)
class RadiiVerdict:
    valid: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate_radii(triple: RadiiTriple) -> RadiiVerdict:
    """Check that a domain with these radii can exist.

    Valid iff ``R_I <= R_O`` and ``|R_I - R_C| <= R_O - R_C``.  Comparisons
    carry a relative slack of 1e-12 so that triples built by floating-point
    arithmetic (e.g. ``(r + a, r - a, r)``) are not rejected by round-off.

    Raises :class:`InputDomainError` for non-finite or non-positive radii.
    """
    ro, ri, rc = (float(v) for v in triple)
    for name, v in (("R_O", ro), ("R_I", ri), ("R_C", rc)):
        if not math.isfinite(v):
            raise InputDomainError(f"{name} must be finite, got {v}")
        if v <= 0.0:
            raise InputDomainError(f"{name} must be positive, got {v}")
    slack = _RADII_SLACK * max(ro, ri, rc)
    if ri > ro + slack:
        return RadiiVerdict(False, f"R_I <= R_O violated: R_I = {ri:g} > R_O = {ro:g}")
    if abs(ri - rc) > ro - rc + slack:
        return RadiiVerdict(
            False,
            f"|R_I - R_C| <= R_O - R_C violated: |{ri:g} - {rc:g}| = {abs(ri - rc):g}"
            f" > {ro:g} - {rc:g} = {ro - rc:g}",
        )
    return RadiiVerdict(True)


def require_valid(triple: RadiiTriple) -> RadiiTriple:
    verdict = validate_radii(triple)
    if not verdict:
        raise InvalidRadiiError(verdict.violation)
    return triple


def is_disk_shaped(triple: RadiiTriple, tol: float = 1e-12) -> bool:
    """True iff the triple is that of a disk ``D(a, r)``: ``(r + a, r - a, r)``."""
    ro, ri, rc = triple
    return abs(2.0 * rc - ro - ri) <= tol * max(ro, 1.0)


# --------------------------------------------------------------------------
# boundary pieces


@dataclass(frozen=True)
class ArcPiece:
    """Circular arc traversed counterclockwise; angles are outward-normal angles."""

    center: complex
    radius: float
    psi0: float
    psi1: float

    @property
    def length(self) -> float:
        return self.radius * (self.psi1 - self.psi0)

    def evaluate(self, s):
        psi = self.psi0 + np.asarray(s, dtype=float) / self.radius
        e = np.exp(1j * psi)
        return self.center + self.radius * e, 1j * e


@dataclass(frozen=True)
class SegmentPiece:
    start: complex
    end: complex

    @property
    def length(self) -> float:
        return abs(self.end - self.start)

    def evaluate(self, s):
        s = np.asarray(s, dtype=float)
        u = (self.end - self.start) / self.length
        return self.start + s * u, np.full(s.shape, u, dtype=complex)


class _HullGeometry:
    """Shared machinery for the convex hull of one or two disks."""

    def __init__(self, disks: list["Disk"]):
        if len(disks) == 2:
            a, b = disks
            d = abs(b.center.complex - a.center.complex)
            if d <= abs(a.radius - b.radius):
                disks = [a if a.radius >= b.radius else b]
        self.disks = disks
        if len(disks) == 1:
            (c,) = disks
            cc = c.center.complex
            self.hull = np.array([cc.real, cc.imag, c.radius, cc.real, cc.imag, c.radius,
                                  0.0, 0.0, 0.0, 0.0, 0.0])
            self.pieces = [ArcPiece(cc, c.radius, 0.0, TWO_PI)]
        else:
            d1, d2 = disks
            c1, c2 = d1.center.complex, d2.center.complex
            r1, r2 = d1.radius, d2.radius
            dist = abs(c2 - c1)
            u = (c2 - c1) / dist
            beta = math.atan2(u.imag, u.real)
            gamma = math.acos((r1 - r2) / dist)
            n_plus = np.exp(1j * (beta + gamma))
            n_minus = np.exp(1j * (beta - gamma))
            self.hull = np.array([c1.real, c1.imag, r1, c2.real, c2.imag, r2,
                                  n_plus.real, n_plus.imag, n_minus.real, n_minus.imag, 1.0])
            self.pieces = [
                ArcPiece(c2, r2, beta - gamma, beta + gamma),
                SegmentPiece(c2 + r2 * n_plus, c1 + r1 * n_plus),
                ArcPiece(c1, r1, beta + gamma, beta - gamma + TWO_PI),
                SegmentPiece(c1 + r1 * n_minus, c2 + r2 * n_minus),
            ]
        lengths = [p.length for p in self.pieces]
        self.cumulative = np.concatenate([[0.0], np.cumsum(lengths)])
        self.perimeter = float(self.cumulative[-1])
        self.start_offset = self._rightmost_offset()

    def _rightmost_offset(self) -> float:
        for piece, cum in zip(self.pieces, self.cumulative):
            if isinstance(piece, ArcPiece):
                k = math.floor(piece.psi0 / TWO_PI) + 1
                if TWO_PI * k <= piece.psi1:
                    return float((cum + piece.radius * (TWO_PI * k - piece.psi0)) % self.perimeter)
        raise DomainRepresentationError("boundary has no rightmost arc point")  # pragma: no cover

    def evaluate(self, t):
        """Positions and unit tangents (complex) at arclength parameters ``t``."""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        s = np.mod(t + self.start_offset, self.perimeter)
        idx = np.clip(np.searchsorted(self.cumulative, s, side="right") - 1, 0, len(self.pieces) - 1)
        pos = np.empty(t.shape, dtype=complex)
        tan = np.empty(t.shape, dtype=complex)
        for k, piece in enumerate(self.pieces):
            mask = idx == k
            if mask.any():
                p, q = piece.evaluate(s[mask] - self.cumulative[k])
                pos[mask] = p
                tan[mask] = q
        return pos, tan

    def parameter_of(self, w: complex) -> float:
        """Arclength parameter of the boundary point nearest to ``w``."""
        best = (math.inf, 0.0)
        for piece, cum in zip(self.pieces, self.cumulative):
            if isinstance(piece, ArcPiece):
                ang = math.atan2((w - piece.center).imag, (w - piece.center).real)
                ang = piece.psi0 + (ang - piece.psi0) % TWO_PI
                if ang > piece.psi1:
                    cands = [piece.psi0, piece.psi1]
                else:
                    cands = [ang]
                for a in cands:
                    p = piece.center + piece.radius * complex(math.cos(a), math.sin(a))
                    dd = abs(p - w)
                    if dd < best[0]:
                        best = (dd, cum + piece.radius * (a - piece.psi0))
            else:
                u = (piece.end - piece.start) / piece.length
                s = min(max(((w - piece.start) * u.conjugate()).real, 0.0), piece.length)
                dd = abs(piece.start + s * u - w)
                if dd < best[0]:
                    best = (dd, cum + s)
        return float((best[1] - self.start_offset) % self.perimeter)

    def bbox(self):
        xs = [d.center.x - d.radius for d in self.disks] + [d.center.x + d.radius for d in self.disks]
        ys = [d.center.y - d.radius for d in self.disks] + [d.center.y + d.radius for d in self.disks]
        return min(xs), max(xs), min(ys), max(ys)


class _HullDomain:
    """Mixin giving a domain the hull-based metric surface; needs ``_geom``."""

    _geom: _HullGeometry

    @property
    def scale(self) -> float:
        x0, x1, y0, y1 = self._geom.bbox()
        return max(x1 - x0, y1 - y0)

    @property
    def perimeter(self) -> float:
        return self._geom.perimeter

    @property
    def pieces(self):
        """Boundary pieces in counterclockwise order (not aligned to the start point)."""
        return list(self._geom.pieces)

    @property
    def hull_params(self) -> np.ndarray:
        return self._geom.hull

    def gaps(self, points) -> np.ndarray:
        pts = np.ascontiguousarray(np.asarray(points, dtype=float).reshape(-1, 2))
        return kernels.hull_gap_many(pts, self._geom.hull)[0]

    def gap(self, x: float, y: float) -> float:
        return kernels.hull_gap(x, y, self._geom.hull)[0]

    def nearest_boundary(self, z: PointLike):
        p = as_point(z)
        g, nx, ny = kernels.hull_gap(p.x, p.y, self._geom.hull)
        if g < -_EXTERIOR_TOL * (1.0 + self.scale):
            raise ExteriorPointError(f"point ({p.x}, {p.y}) lies outside the domain")
        return max(g, 0.0), Point2(nx, ny)

    def distance(self, z: PointLike) -> float:
        return self.nearest_boundary(z)[0]

    def contains(self, z: PointLike) -> bool:
        p = as_point(z)
        return self.gap(p.x, p.y) > 0.0

    def bbox(self):
        return self._geom.bbox()

    def boundary_point(self, t: float) -> BoundaryPoint:
        pos, tan = self._geom.evaluate(t)
        return BoundaryPoint(Point2(pos[0].real, pos[0].imag), float(t) % self.perimeter,
                             Point2(tan[0].real, tan[0].imag))

    def boundary_samples(self, n: int):
        """``n`` equally spaced boundary positions and tangents as complex arrays."""
        t = np.arange(n) * (self.perimeter / n)
        return self._geom.evaluate(t)

    def locate(self, w: PointLike) -> BoundaryPoint:
        """Boundary point nearest to ``w`` with its parameter and tangent."""
        p = as_point(w)
        t = self._geom.parameter_of(p.complex)
        return self.boundary_point(t)


# --------------------------------------------------------------------------
# concrete domains


@dataclass(frozen=True)
class Disk(_HullDomain):
    center: Point2
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise InputDomainError(f"disk radius must be positive and finite, got {self.radius}")

    @cached_property
    def _geom(self) -> _HullGeometry:
        return _HullGeometry([self])

    @property
    def curvature_radius(self) -> float:
        return self.radius

    def to_dict(self) -> dict:
        return {"kind": "disk", "center": [self.center.x, self.center.y], "radius": self.radius}


@dataclass(frozen=True)
class Stadium(_HullDomain):
    """Convex hull of two open disks."""

    disk_a: Disk
    disk_b: Disk

    @property
    def r1(self) -> float:
        return self.disk_a.radius

    @property
    def r2(self) -> float:
        return self.disk_b.radius

    @property
    def d(self) -> float:
        return (self.disk_b.center - self.disk_a.center).norm()

    @property
    def is_degenerate(self) -> bool:
        """One generating disk lies inside the other; the stadium is the larger disk."""
        return self.d <= abs(self.r1 - self.r2)

    @cached_property
    def _geom(self) -> _HullGeometry:
        return _HullGeometry([self.disk_a, self.disk_b])

    @property
    def curvature_radius(self) -> float:
        return min(d.radius for d in self._geom.disks)

    def to_dict(self) -> dict:
        return {"kind": "stadium", "disk_a": self.disk_a.to_dict(), "disk_b": self.disk_b.to_dict()}

    @classmethod
    def from_radii(cls, r1: float, r2: float, d: float) -> "Stadium":
        """``S(r1, r2, d)`` with the first center at 0 and the second at ``(d, 0)``."""
        return cls(Disk(Point2(0.0, 0.0), r1), Disk(Point2(d, 0.0), r2))


@dataclass(frozen=True)
class DiskPointHull:
    """Closed convex hull of a disk (radius may be 0) and a point."""

    center: Point2
    radius: float
    point: Point2

    def generating_disks(self, union_radius: float) -> list[Disk]:
        return [Disk(self.center, self.radius + union_radius), Disk(self.point, union_radius)]

    def to_dict(self) -> dict:
        return {"kind": "disk_point", "center": list(self.center), "radius": self.radius,
                "point": list(self.point)}


@dataclass(frozen=True)
class SegmentHull:
    start: Point2
    end: Point2

    def generating_disks(self, union_radius: float) -> list[Disk]:
        return [Disk(self.start, union_radius), Disk(self.end, union_radius)]

    def to_dict(self) -> dict:
        return {"kind": "segment", "start": list(self.start), "end": list(self.end)}


@dataclass(frozen=True)
class DiskUnionDomain(_HullDomain):
    """Union of the disks ``D(z, union_radius)`` over all ``z`` in a compact convex seed."""

    hull_seed: Union[DiskPointHull, SegmentHull]
    union_radius: float

    def __post_init__(self):
        if not (math.isfinite(self.union_radius) and self.union_radius > 0.0):
            raise InputDomainError("union radius must be positive")

    @cached_property
    def _geom(self) -> _HullGeometry:
        return _HullGeometry(self.hull_seed.generating_disks(self.union_radius))

    @property
    def curvature_radius(self) -> float:
        return self.union_radius

    @property
    def stadium(self) -> Stadium:
        a, b = self.hull_seed.generating_disks(self.union_radius)
        return Stadium(a, b)

    def boundary(self, t: float) -> BoundaryPoint:
        return self.boundary_point(t)

    def to_dict(self) -> dict:
        return {"kind": "disk_union", "hull_seed": self.hull_seed.to_dict(),
                "union_radius": self.union_radius}


@dataclass(frozen=True)
class Strip:
    """Horizontal strip ``{|Im z| < halfwidth}``."""

    halfwidth: float

    def __post_init__(self):
        if not (math.isfinite(self.halfwidth) and self.halfwidth > 0.0):
            raise InputDomainError("strip halfwidth must be positive")

    @property
    def scale(self) -> float:
        return 2.0 * self.halfwidth

    @property
    def curvature_radius(self) -> float:
        return self.halfwidth

    def gaps(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        return self.halfwidth - np.abs(pts[:, 1])

    def gap(self, x: float, y: float) -> float:
        return self.halfwidth - abs(y)

    def nearest_boundary(self, z: PointLike):
        p = as_point(z)
        g = self.gap(p.x, p.y)
        if g < -_EXTERIOR_TOL * (1.0 + self.scale):
            raise ExteriorPointError(f"point ({p.x}, {p.y}) lies outside the strip")
        return max(g, 0.0), Point2(0.0, -1.0 if p.y < 0 else 1.0)

    def distance(self, z: PointLike) -> float:
        return self.nearest_boundary(z)[0]

    def contains(self, z: PointLike) -> bool:
        p = as_point(z)
        return self.gap(p.x, p.y) > 0.0

    def bbox(self):
        return None

    def to_dict(self) -> dict:
        return {"kind": "strip", "halfwidth": self.halfwidth}


@dataclass(frozen=True)
class SectorSpec:
    """Infinite sector of opening ``2 * half_angle``.

    In normalized coordinates (vertex at 0, axis along +x) the sector is
    ``{|Arg z| < half_angle}``; ``vertex`` and ``axis_angle`` give the rigid
    motion from normalized to world coordinates.
    """

    half_angle: float
    vertex: Point2 = field(default_factory=lambda: Point2(0.0, 0.0))
    axis_angle: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "vertex", as_point(self.vertex))
        if not (0.0 < self.half_angle <= math.pi / 2 + 1e-15):
            raise InputDomainError(f"sector half-angle must lie in (0, pi/2], got {self.half_angle}")

    @property
    def scale(self) -> float:
        return 1.0

    @property
    def curvature_radius(self) -> float:
        return math.inf

    def normalize(self, z: PointLike) -> complex:
        """World point -> normalized sector coordinates."""
        p = as_point(z)
        return (p.complex - self.vertex.complex) * complex(math.cos(-self.axis_angle),
                                                           math.sin(-self.axis_angle))

    def _local(self, points):
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        rot = np.exp(-1j * self.axis_angle)
        return ((pts[:, 0] - self.vertex.x) + 1j * (pts[:, 1] - self.vertex.y)) * rot

    def gaps(self, points) -> np.ndarray:
        w = self._local(points)
        s, c = math.sin(self.half_angle), math.cos(self.half_angle)
        return np.minimum(w.real * s - w.imag * c, w.real * s + w.imag * c)

    def gap(self, x: float, y: float) -> float:
        w = self.normalize((x, y))
        s, c = math.sin(self.half_angle), math.cos(self.half_angle)
        return min(w.real * s - w.imag * c, w.real * s + w.imag * c)

    def nearest_boundary(self, z: PointLike):
        w = self.normalize(z)
        s, c = math.sin(self.half_angle), math.cos(self.half_angle)
        upper = w.real * s - w.imag * c
        lower = w.real * s + w.imag * c
        g, n = (upper, complex(-s, c)) if upper <= lower else (lower, complex(-s, -c))
        if g < -_EXTERIOR_TOL * (1.0 + abs(w)):
            raise ExteriorPointError("point lies outside the sector")
        n *= complex(math.cos(self.axis_angle), math.sin(self.axis_angle))
        return max(g, 0.0), Point2(n.real, n.imag)

    def distance(self, z: PointLike) -> float:
        return self.nearest_boundary(z)[0]

    def contains(self, z: PointLike) -> bool:
        p = as_point(z)
        return self.gap(p.x, p.y) > 0.0

    def bbox(self):
        return None

    def to_dict(self) -> dict:
        return {"kind": "sector", "half_angle": self.half_angle, "vertex": list(self.vertex),
                "axis_angle": self.axis_angle}


Domain = Union[Disk, Stadium, DiskUnionDomain, Strip, SectorSpec]


# --------------------------------------------------------------------------
# operations


def construct_canonical_domain(triple: RadiiTriple) -> DiskUnionDomain:
    """Extremal domain with the given radii triple.

    With ``R_I > R_C`` the seed is the hull of ``D(0, R_I - R_C)`` and the
    point ``R_O - R_C``; otherwise it is the segment ``[R_C - R_I, R_O - R_C]``.
    """
    ro, ri, rc = require_valid(triple)
    if ri > rc:
        seed = DiskPointHull(Point2(0.0, 0.0), ri - rc, Point2(ro - rc, 0.0))
    else:
        seed = SegmentHull(Point2(rc - ri, 0.0), Point2(ro - rc, 0.0))
    return DiskUnionDomain(seed, rc)


def stadium_boundary(s: Stadium, t: float) -> BoundaryPoint:
    return s.boundary_point(t)


def distance_to_boundary(domain: Domain, z: PointLike) -> float:
    return domain.distance(z)


def find_touching_disk(domain: Domain, w: BoundaryPoint, tol: float = 1e-9) -> Disk:
    """The disk of radius ``R_C`` inside the domain whose boundary passes through ``w``."""
    rc = domain.curvature_radius
    n = w.outward_normal
    a = Point2(w.position.x - rc * n.x, w.position.y - rc * n.y)
    g = domain.gap(a.x, a.y)
    if g < rc - tol * max(1.0, rc):
        raise DomainRepresentationError(
            f"D(({a.x:.6g}, {a.y:.6g}), {rc:g}) is not contained in the domain "
            f"(clearance {g:.3g} < {rc:g})"
        )
    return Disk(a, rc)


def stadium_sector(s: Stadium) -> SectorSpec | None:
    """Circumscribed infinite sector of a stadium with unequal radii.

    ``None`` for equal radii (the strip case) and when one disk lies strictly
    inside the other.  Internal tangency ``d = |r2 - r1|`` gives the half-plane
    ``half_angle = pi/2``.
    """
    r1, r2, d = s.r1, s.r2, s.d
    if r1 == r2 or d < abs(r2 - r1) or d == 0.0:
        return None
    small, large = (s.disk_a, s.disk_b) if r1 < r2 else (s.disk_b, s.disk_a)
    theta = math.asin(min(1.0, abs(r2 - r1) / d))
    u = (large.center.complex - small.center.complex) / d
    vertex = small.center.complex - small.radius / math.sin(theta) * u
    return SectorSpec(theta, Point2(vertex.real, vertex.imag), math.atan2(u.imag, u.real))


# --------------------------------------------------------------------------
# serialization


def _pt(v) -> Point2:
    return Point2(float(v[0]), float(v[1]))


def domain_from_dict(d: dict) -> Domain:
    kind = d.get("kind")
    try:
        if kind == "disk":
            return Disk(_pt(d["center"]), float(d["radius"]))
        if kind == "stadium":
            return Stadium(domain_from_dict({"kind": "disk", **d["disk_a"]}),
                           domain_from_dict({"kind": "disk", **d["disk_b"]}))
        if kind == "disk_union":
            if "triple" in d:
                return construct_canonical_domain(RadiiTriple.from_dict(d["triple"]))
            seed = d["hull_seed"]
            if seed["kind"] == "disk_point":
                hs = DiskPointHull(_pt(seed["center"]), float(seed["radius"]), _pt(seed["point"]))
            elif seed["kind"] == "segment":
                hs = SegmentHull(_pt(seed["start"]), _pt(seed["end"]))
            else:
                raise InputDomainError(f"unknown hull seed kind {seed['kind']!r}")
            return DiskUnionDomain(hs, float(d["union_radius"]))
        if kind == "strip":
            return Strip(float(d["halfwidth"]))
        if kind == "sector":
            return SectorSpec(float(d["half_angle"]), _pt(d.get("vertex", (0.0, 0.0))),
                              float(d.get("axis_angle", 0.0)))
    except (KeyError, TypeError, IndexError) as exc:
        raise InputDomainError(f"malformed {kind} description: {exc}") from exc
    raise InputDomainError(f"unknown domain kind {kind!r}")


def sample_interior(domain: Domain, n: int, rng: np.random.Generator,
                    min_clearance: float = 0.0) -> np.ndarray:
    """Rejection-sample ``n`` interior points of a bounded domain."""
    box = domain.bbox()
    if box is None:
        raise InputDomainError("cannot sample an unbounded domain")
    x0, x1, y0, y1 = box
    out: list[np.ndarray] = []
    count = 0
    while count < n:
        pts = np.column_stack([rng.uniform(x0, x1, 4 * n), rng.uniform(y0, y1, 4 * n)])
        keep = pts[domain.gaps(pts) > min_clearance]
        out.append(keep)
        count += len(keep)
    return np.concatenate(out)[:n]


def iter_points(points: Iterable[PointLike]) -> Iterable[Point2]:
    for p in points:
        yield as_point(p)
