"""Derivative bounds for conformal maps onto convex domains with given radii.

``F(R_O, R_I, R_C)`` bounds the hyperbolic distance from 0 to the center of
any ``R_C``-disk inside the domain; ``R_C exp(2F)`` then bounds ``sup |f'|``.
The older quasihyperbolic bound ``R_C exp(2 (R_O - R_C) Phi(R_I, R_C))`` is
kept for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputDomainError
from .geometry import RadiiTriple, is_disk_shaped, require_valid
from .metrics import KPCaseBranch, kp_distance_stadium_centers, phi

CSV_HEADER = ("R_O", "R_I", "R_C", "F", "case", "new_bound", "old_bound", "ratio", "sharp")


@dataclass(frozen=True)
class BoundReport:
    triple: RadiiTriple
    f_value: float
    case_branch: KPCaseBranch
    new_bound: float
    old_bound: float
    ratio: float
    sharp: bool

    @property
    def improves(self) -> bool:
        # R_I = R_C makes both bounds equal; allow for round-off there
        return self.new_bound <= self.old_bound * (1.0 + 1e-12)

    def to_dict(self) -> dict:
        return {
            "triple": self.triple.to_dict(),
            "f_value": self.f_value,
            "case_branch": self.case_branch.to_dict(),
            "new_bound": self.new_bound,
            "old_bound": self.old_bound,
            "ratio": self.ratio,
            "sharp": self.sharp,
        }

    def csv_row(self) -> tuple:
        t = self.triple
        return (t.r_outer, t.r_inner, t.r_curv, self.f_value, self.case_branch.tag.value,
                self.new_bound, self.old_bound, self.ratio, self.sharp)


def _stadium_args(triple: RadiiTriple) -> tuple[float, float, float]:
    big = max(triple.r_curv, triple.r_inner)
    small = min(triple.r_curv, triple.r_inner)
    return big, small, max(0.0, triple.r_outer - triple.r_curv)


def distance_bound_F(triple: RadiiTriple) -> tuple[float, KPCaseBranch]:
    """``F`` and the branch of the stadium distance formula that produced it."""
    require_valid(triple)
    big, small, d = _stadium_args(triple)
    value, branch = kp_distance_stadium_centers(big, small, d)
    return value.value, branch


def old_bound(triple: RadiiTriple) -> float:
    require_valid(triple)
    t = triple
    return t.r_curv * math.exp(2.0 * (t.r_outer - t.r_curv) * phi(t.r_inner, t.r_curv))


def main_bound(triple: RadiiTriple) -> BoundReport:
    require_valid(triple)
    f, branch = distance_bound_F(triple)
    new = triple.r_curv * math.exp(2.0 * f)
    old = old_bound(triple)
    return BoundReport(triple, f, branch, new, old, new / old, is_disk_shaped(triple))


def _check_disk(a: float, r: float) -> None:
    if not (math.isfinite(a) and math.isfinite(r) and r > 0.0 and 0.0 <= a < r):
        raise InputDomainError(f"need 0 <= a < r, got a={a}, r={r}")


def sharp_disk_bound(a: float, r: float) -> float:
    """``r (r + a) / (r - a)``, the exact ``sup |f'|`` for the disk ``D(a, r)``.

    Cross-checked against :func:`main_bound` on the triple ``(r + a, r - a, r)``.
    """
    _check_disk(a, r)
    value = r * (r + a) / (r - a)
    via_main = main_bound(RadiiTriple(r + a, r - a, r)).new_bound
    if not math.isclose(value, via_main, rel_tol=1e-9):
        raise AssertionError(f"disk bound mismatch: {value} vs {via_main}")
    return value


def old_bound_disk_ratio(a: float, r: float) -> float:
    _check_disk(a, r)
    return (r + a) * (r - a) / (r * r)


# --------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class GridSpec:
    """Axis ranges for a product grid of radii triples (inclusive, ``n`` points each)."""

    r_outer: tuple[float, float, int]
    r_inner: tuple[float, float, int]
    r_curv: tuple[float, float, int]

    def axes(self):
        for lo, hi, n in (self.r_outer, self.r_inner, self.r_curv):
            if n < 1 or not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi or lo <= 0.0:
                raise InputDomainError(f"bad grid axis ({lo}, {hi}, {n})")
        return [np.linspace(lo, hi, n) for lo, hi, n in (self.r_outer, self.r_inner, self.r_curv)]

    def triples(self):
        xo, xi, xc = self.axes()
        for ro in xo:
            for ri in xi:
                for rc in xc:
                    yield RadiiTriple(float(ro), float(ri), float(rc))


@dataclass
class SweepResult:
    reports: list[BoundReport]
    skipped: int

    @property
    def counterexamples(self) -> list[BoundReport]:
        """Triples where the new bound is worse than the old one."""
        return [r for r in self.reports if not r.improves]


def sweep_bounds(triples) -> SweepResult:
    from .geometry import validate_radii

    reports, skipped = [], 0
    for t in triples:
        if not validate_radii(t):
            skipped += 1
            continue
        reports.append(main_bound(t))
    return SweepResult(reports, skipped)
