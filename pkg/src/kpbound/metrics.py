"""Closed-form hyperbolic, quasihyperbolic and Kulkarni-Pinkall quantities.

Curvature -4 convention throughout: the unit disk has density
``1 / (1 - |z|^2)`` and distance ``artanh``-based radial distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import BoundaryDivergenceError, InputDomainError


class MetricKind(str, Enum):
    HYPERBOLIC = "hyperbolic"
    QUASIHYPERBOLIC = "quasihyperbolic"
    KP = "kp"


class Provenance(str, Enum):
    CLOSED_FORM = "closed_form"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class MetricValue:
    value: float
    metric_kind: MetricKind
    provenance: Provenance = Provenance.CLOSED_FORM

    def __post_init__(self):
        if not self.value >= 0.0:
            raise InputDomainError(f"metric value must be nonnegative, got {self.value}")

    def __float__(self) -> float:
        return float(self.value)

    def to_dict(self) -> dict:
        return {"value": self.value, "metric_kind": self.metric_kind.value,
                "provenance": self.provenance.value}


class CaseTag(str, Enum):
    EQUAL_RADII = "equal_radii"
    EXTREMAL_DISK_CONSTANT = "extremal_disk_constant"
    SECTOR_COMPOSITE = "sector_composite"


@dataclass(frozen=True)
class KPCaseBranch:
    """Which of the three stadium-distance formulas applies, with its angle and threshold."""

    tag: CaseTag
    theta: float
    threshold: float

    def to_dict(self) -> dict:
        return {"tag": self.tag.value, "theta": self.theta, "threshold": self.threshold}


def _check_radial(r: float, d: float) -> None:
    if not (math.isfinite(r) and r > 0.0):
        raise InputDomainError(f"radius must be positive, got {r}")
    if not (math.isfinite(d) and d >= 0.0):
        raise InputDomainError(f"offset must be nonnegative, got {d}")
    if d >= r:
        raise BoundaryDivergenceError(f"offset {d} reaches the boundary of a disk of radius {r}")


def hyperbolic_density_disk(r: float, d: float) -> MetricValue:
    """Hyperbolic density ``r / (r^2 - d^2)`` at distance ``d`` from the center."""
    _check_radial(r, d)
    return MetricValue(r / ((r - d) * (r + d)), MetricKind.HYPERBOLIC)


def hyperbolic_distance_disk_radial(r: float, d: float) -> MetricValue:
    """Hyperbolic distance from the center of a radius-``r`` disk to a point at distance ``d``."""
    _check_radial(r, d)
    return MetricValue(math.atanh(d / r), MetricKind.HYPERBOLIC)


def quasihyperbolic_density(domain, z) -> MetricValue:
    dist = domain.distance(z)
    if dist <= 0.0:
        raise BoundaryDivergenceError("quasihyperbolic density diverges on the boundary")
    return MetricValue(1.0 / dist, MetricKind.QUASIHYPERBOLIC)


def kp_density_strip(halfwidth: float) -> MetricValue:
    """KP density on the axis of a strip of the given half-width."""
    if not (math.isfinite(halfwidth) and halfwidth > 0.0):
        raise InputDomainError(f"halfwidth must be positive, got {halfwidth}")
    return MetricValue(1.0 / halfwidth, MetricKind.KP)


def kp_density_sector_axis(theta: float, x: float) -> MetricValue:
    """KP density at distance ``x`` from the vertex on the axis of ``{|Arg z| < theta}``."""
    if not (0.0 < theta <= math.pi / 2 + 1e-15):
        raise InputDomainError(f"half-angle must lie in (0, pi/2], got {theta}")
    if not (math.isfinite(x) and x > 0.0):
        raise InputDomainError(f"axis position must be positive, got {x}")
    return MetricValue(1.0 / (2.0 * x * math.tan(theta / 2.0)), MetricKind.KP)


def stadium_angle(big: float, small: float, d: float) -> float:
    """``arcsin((R - r) / d)`` when ``d >= R - r``, else ``pi/2``."""
    if d > 0.0 and d >= big - small:
        return math.asin(min(1.0, (big - small) / d))
    return math.pi / 2


def kp_branch_extremal_constant(big: float, d: float) -> float:
    """Constant extremal disk ``D_R`` along the whole segment."""
    return math.atanh(d / big)


def kp_branch_sector_composite(big: float, small: float, theta: float) -> float:
    """Proximal sector part plus distal ``D_R`` part."""
    t = math.tan(theta / 2.0)
    # log((R/r) cos(theta)), kept accurate when R/r -> 1 and theta -> 0
    proximal = (math.log1p((big - small) / small) + 0.5 * math.log1p(-math.sin(theta) ** 2)) / t
    distal = math.log1p(t) - math.log1p(-t)
    return 0.5 * (proximal + distal)


def kp_distance_stadium_centers(big: float, small: float, d: float) -> tuple[MetricValue, KPCaseBranch]:
    """KP distance between the two centers of the stadium ``S(R, r, d)``.

    The radii may be given in either order; the stadium is symmetric in its
    two disks, so they are sorted before the case analysis.
    """
    for name, v in (("R", big), ("r", small)):
        if not (math.isfinite(v) and v > 0.0):
            raise InputDomainError(f"{name} must be positive, got {v}")
    if not (math.isfinite(d) and d >= 0.0):
        raise InputDomainError(f"center distance must be nonnegative, got {d}")
    if small > big:
        big, small = small, big
    theta = stadium_angle(big, small, d)
    threshold = big * math.tan(theta / 2.0)
    if small == big:
        value, tag = d / small, CaseTag.EQUAL_RADII
    elif d <= threshold:
        value, tag = kp_branch_extremal_constant(big, d), CaseTag.EXTREMAL_DISK_CONSTANT
    else:
        value, tag = kp_branch_sector_composite(big, small, theta), CaseTag.SECTOR_COMPOSITE
    return MetricValue(value, MetricKind.KP), KPCaseBranch(tag, theta, threshold)


def continuity_threshold(big: float, small: float) -> float:
    """Center distance ``d`` solving ``d = R tan(theta(d) / 2)``: ``R sqrt((R - r)/(R + r))``."""
    return big * math.sqrt((big - small) / (big + small))


def phi(a: float, b: float) -> float:
    """``(log a - log b) / (a - b)``, continuously extended by ``1/a`` at ``a = b``."""
    if not (math.isfinite(a) and math.isfinite(b) and a > 0.0 and b > 0.0):
        raise InputDomainError(f"phi needs positive arguments, got ({a}, {b})")
    if a == b:
        return 1.0 / a
    x = (a - b) / b
    return math.log1p(x) / (a - b)
