import math

import numpy as np
import pytest

from kpbound.errors import ExteriorPointError
from kpbound.extremal import contact_set, extremal_disk, kp_density_numeric, kp_length_numeric
from kpbound.geometry import (Disk, Point2, RadiiTriple, SectorSpec, Stadium, Strip,
                              construct_canonical_domain, sample_interior)
from kpbound.metrics import (MetricKind, Provenance, hyperbolic_density_disk,
                             kp_density_sector_axis, kp_distance_stadium_centers)

CANON = construct_canonical_domain(RadiiTriple(0.6, 0.5, 0.4))


class TestFixtures:
    @pytest.mark.parametrize("z", [(0.0, 0.0), (0.3, -0.2), (0.9, 0.1)])
    def test_disk_returns_itself(self, z):
        dom = Disk(Point2(0, 0), 1)
        res = extremal_disk(dom, z)
        assert res.disk.center.norm() < 1e-6
        assert res.disk.radius == pytest.approx(1.0, abs=1e-9)
        assert res.density.value == pytest.approx(hyperbolic_density_disk(1, math.hypot(*z)).value, rel=1e-9)
        assert res.converged and res.has_arc_contact

    @pytest.mark.parametrize("x", [-3.0, 0.0, 0.7, 12.5])
    def test_strip_axis(self, x):
        res = extremal_disk(Strip(1.0), (x, 0.0))
        assert abs(res.disk.center.x - x) < 1e-6 and abs(res.disk.center.y) < 1e-6
        assert res.disk.radius == pytest.approx(1.0, abs=1e-12)
        assert res.density.value == pytest.approx(1.0, rel=1e-9)
        ys = sorted(p.position.y for p in res.contact_points)
        assert ys == pytest.approx([-1.0, 1.0], abs=1e-9)
        assert res.truncation_error is not None and res.truncation_error < 1e-9

    def test_stadium_big_center(self):
        res = extremal_disk(Stadium.from_radii(2, 1, 2), (0.0, 0.0))
        assert res.disk.center.norm() < 1e-6
        assert res.disk.radius == pytest.approx(2.0, abs=1e-9)
        assert res.density.value == pytest.approx(0.5, rel=1e-9)

    def test_stadium_against_brute_force_grid(self):
        dom = Stadium.from_radii(2, 1, 2)
        z = (1.2, 0.3)
        xs = np.arange(-2, 3, 1e-3)
        ys = np.arange(-1.5, 1.5, 1e-3)
        gx, gy = np.meshgrid(xs, ys)
        c = np.column_stack([gx.ravel(), gy.ravel()])
        rho = dom.gaps(c)
        den = rho ** 2 - ((c[:, 0] - z[0]) ** 2 + (c[:, 1] - z[1]) ** 2)
        brute = np.min(np.where((rho > 0) & (den > 0), rho / np.where(den > 0, den, 1), np.inf))
        res = extremal_disk(dom, z)
        assert res.density.value <= brute + 1e-12
        assert res.density.value == pytest.approx(brute, rel=1e-4)

    def test_exterior(self):
        with pytest.raises(ExteriorPointError):
            extremal_disk(Disk(Point2(0, 0), 1), (2, 0))


class TestDensity:
    def test_disk_offset_point(self):
        v = kp_density_numeric(Disk(Point2(0, 0), 2), (1, 0))
        assert v.value == pytest.approx(2 / 3, rel=1e-9)
        assert v.metric_kind is MetricKind.KP and v.provenance is Provenance.NUMERIC

    def test_canonical_unit_disk(self):
        dom = construct_canonical_domain(RadiiTriple(1, 1, 1))
        assert kp_density_numeric(dom, (0, 0)).value == pytest.approx(1.0, rel=1e-12)

    @pytest.mark.parametrize("theta,x", [(math.pi / 4, 1.0), (math.pi / 6, 3.0), (math.pi / 2, 2.0)])
    def test_sector_axis(self, theta, x):
        v = kp_density_numeric(SectorSpec(theta), (x, 0.0)).value
        assert v == pytest.approx(kp_density_sector_axis(theta, x).value, rel=1e-3)

    def test_truncated_sector(self):
        # S(1, 100, d) with half-angle pi/4; axis point far from both caps
        theta = math.pi / 4
        d = 99 / math.sin(theta)
        dom = Stadium.from_radii(1, 100, d)
        vertex = -1 / math.sin(theta)
        x = 10.0
        v = kp_density_numeric(dom, (vertex + x, 0.0)).value
        assert v == pytest.approx(kp_density_sector_axis(theta, x).value, rel=1e-3)

    def test_density_below_quasihyperbolic(self, rng):
        for p in sample_interior(CANON, 10, rng, min_clearance=0.01):
            assert kp_density_numeric(CANON, p).value <= 1.0 / CANON.distance(p) * (1 + 1e-9)


class TestDomainMonotonicity:
    def test_shrinking_domain_raises_density(self, rng):
        big = Stadium.from_radii(2, 1, 2)
        small = Stadium.from_radii(1.8, 0.9, 1.9)
        for p in sample_interior(small, 8, rng, min_clearance=0.05):
            assert kp_density_numeric(small, p).value >= kp_density_numeric(big, p).value - 1e-6

    def test_extremal_disk_inherited_by_subdomain(self):
        outer = Stadium.from_radii(2, 1, 2)
        z = (0.2, 0.1)
        res = extremal_disk(outer, z)
        # a subdomain that still contains the extremal disk D(0, 2)
        inner = Stadium(Disk(Point2(0, 0), 2), Disk(Point2(1, 0), 1))
        res2 = extremal_disk(inner, z)
        assert (res2.disk.center - res.disk.center).norm() < 1e-6


class TestContacts:
    def test_stadium_cap_is_one_arc(self):
        comps = contact_set(Stadium.from_radii(2, 1, 2), Disk(Point2(0, 0), 2))
        assert len(comps) == 1 and comps[0].is_arc
        assert comps[0].angular_extent == pytest.approx(2 * math.pi - 2 * math.acos(0.5), abs=0.01)

    def test_strip_two_points(self):
        comps = contact_set(Strip(1.0), Disk(Point2(3, 0), 1))
        assert [c.is_arc for c in comps] == [False, False]
        pts = sorted((p.position.x, p.position.y) for c in comps for p in c.points)
        assert pts == [pytest.approx((3, -1), abs=1e-9), pytest.approx((3, 1), abs=1e-9)]

    def test_interior_disk_empty(self):
        assert contact_set(Stadium.from_radii(2, 1, 2), Disk(Point2(0.5, 0), 1)) == []

    def test_contact_count_property(self, rng):
        for p in sample_interior(CANON, 12, rng, min_clearance=0.005):
            res = extremal_disk(CANON, p)
            assert res.converged
            assert res.has_arc_contact or len(res.contact_points) >= 2
            # disk inside the domain
            ang = np.linspace(0, 2 * np.pi, 512, endpoint=False)
            ring = res.disk.center.complex + res.disk.radius * np.exp(1j * ang)
            assert CANON.gaps(np.column_stack([ring.real, ring.imag])).min() > -1e-9


class TestLength:
    @pytest.mark.parametrize("args,tol", [((1, 1, 3), 1e-3), ((2, 1, 1), 1e-3), ((2, 1, 2), 1e-2)])
    def test_center_to_center(self, args, tol):
        R, r, d = args
        res = kp_length_numeric(Stadium.from_radii(R, r, d), (0, 0), (d, 0))
        exact = kp_distance_stadium_centers(R, r, d)[0].value
        assert abs(res.length.value - exact) <= tol
        assert res.estimated_error < 1e-5 and res.samples > 0
