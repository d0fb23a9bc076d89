import math

import pytest
from hypothesis import given, strategies as st

from kpbound.bounds import (GridSpec, distance_bound_F, main_bound, old_bound,
                            old_bound_disk_ratio, sharp_disk_bound, sweep_bounds)
from kpbound.errors import InputDomainError, InvalidRadiiError
from kpbound.geometry import RadiiTriple, validate_radii
from kpbound.metrics import CaseTag, kp_distance_stadium_centers

# 50-digit mpmath values, computed independently of the package
F_ROUNDED_TRIANGLE = 0.42263357990582986
NEW_ROUNDED_TRIANGLE = 0.9314399359084366
OLD_ROUNDED_TRIANGLE = 0.97656249999999984



@st.composite
def valid_triples(draw):
    """R_C in [0.2, 1] R_O and R_I anywhere in the admissible interval."""
    ro = draw(st.floats(0.1, 5.0))
    rc = draw(st.floats(0.2, 1.0)) * ro
    lo, hi = max(2 * rc - ro, 1e-3), ro
    return RadiiTriple(ro, lo + draw(st.floats(0.0, 1.0)) * (hi - lo), rc)


class TestF:
    def test_disk_at_origin(self):
        f, b = distance_bound_F(RadiiTriple(0.7, 0.7, 0.7))
        assert f == 0.0 and b.tag is CaseTag.EQUAL_RADII

    def test_offset_disk(self):
        f, b = distance_bound_F(RadiiTriple(3, 1, 2))
        assert f == pytest.approx(0.5 * math.log(3), rel=1e-15)
        assert b.tag is CaseTag.EXTREMAL_DISK_CONSTANT

    def test_rounded_triangle(self):
        f, b = distance_bound_F(RadiiTriple(0.6, 0.5, 0.4))
        assert f == pytest.approx(F_ROUNDED_TRIANGLE, rel=1e-14)
        assert b.tag is CaseTag.SECTOR_COMPOSITE
        assert b.theta == pytest.approx(math.pi / 6) and b.threshold == pytest.approx(0.1339745962155614)

    def test_invalid(self):
        with pytest.raises(InvalidRadiiError):
            distance_bound_F(RadiiTriple(1, 0.2, 0.7))

    @given(valid_triples())
    def test_same_code_path_as_stadium_distance(self, t):
        if not validate_radii(t):
            return
        f, _ = distance_bound_F(t)
        ref = kp_distance_stadium_centers(max(t.r_curv, t.r_inner), min(t.r_curv, t.r_inner),
                                          t.r_outer - t.r_curv)[0].value
        assert f == ref

    @given(valid_triples())
    def test_nonnegative_and_zero_only_for_centered_disk(self, t):
        if not validate_radii(t):
            return
        f, _ = distance_bound_F(t)
        assert f >= 0.0
        if t.r_outer - t.r_curv > 1e-9 * t.r_outer:
            assert f > 0.0


class TestMainBound:
    def test_centered_disk(self):
        assert main_bound(RadiiTriple(0.8, 0.8, 0.8)).new_bound == pytest.approx(0.8)

    def test_offset_disk(self):
        rep = main_bound(RadiiTriple(3, 1, 2))
        assert abs(rep.new_bound - 6) <= 1e-9 and abs(rep.old_bound - 8) <= 1e-9
        assert rep.ratio == pytest.approx(0.75) and rep.sharp

    def test_rounded_triangle(self):
        rep = main_bound(RadiiTriple(0.6, 0.5, 0.4))
        assert rep.new_bound == pytest.approx(NEW_ROUNDED_TRIANGLE, rel=1e-14)
        assert rep.old_bound == pytest.approx(OLD_ROUNDED_TRIANGLE, rel=1e-14)
        assert round(rep.new_bound, 3) == 0.931 and round(rep.old_bound, 3) == 0.977
        assert not rep.sharp and rep.improves

    def test_old_bound_trivial(self):
        assert old_bound(RadiiTriple(1.3, 1.3, 1.3)) == pytest.approx(1.3)

    def test_report_serializes(self):
        d = main_bound(RadiiTriple(0.6, 0.5, 0.4)).to_dict()
        assert set(d) == {"triple", "f_value", "case_branch", "new_bound", "old_bound", "ratio", "sharp"}
        assert d["case_branch"]["tag"] == "sector_composite"

    @given(valid_triples())
    def test_new_bound_at_least_curvature_radius(self, t):
        if validate_radii(t):
            assert main_bound(t).new_bound >= t.r_curv * (1 - 1e-15)


class TestDiskFamily:
    @pytest.mark.parametrize("a,r,expected", [(0, 1.7, 1.7), (1, 2, 6), (0.5, 1, 3)])
    def test_sharp(self, a, r, expected):
        assert sharp_disk_bound(a, r) == pytest.approx(expected, rel=1e-14)

    def test_sharp_cross_check(self):
        assert main_bound(RadiiTriple(1.5, 0.5, 1)).new_bound == pytest.approx(3.0, rel=1e-14)

    @pytest.mark.parametrize("a,r,expected", [(0, 1, 1), (1, 2, 0.75), (0.9, 1, 0.19)])
    def test_ratio(self, a, r, expected):
        assert old_bound_disk_ratio(a, r) == pytest.approx(expected, rel=1e-14)

    @given(st.floats(0.05, 10), st.floats(0.0, 0.999))
    def test_disk_consistency(self, r, frac):
        a = frac * r
        rep = main_bound(RadiiTriple(r + a, r - a, r))
        assert rep.new_bound == pytest.approx(r * (r + a) / (r - a), rel=1e-12)
        assert rep.ratio == pytest.approx(1 - frac ** 2, rel=1e-9, abs=1e-12)
        assert rep.sharp

    @pytest.mark.parametrize("a,r", [(1, 1), (2, 1), (-0.1, 1), (0, 0)])
    def test_bad(self, a, r):
        with pytest.raises(InputDomainError):
            sharp_disk_bound(a, r)
        with pytest.raises(InputDomainError):
            old_bound_disk_ratio(a, r)


class TestSweep:
    def test_grid(self):
        res = sweep_bounds(GridSpec((0.1, 1, 10), (0.1, 1, 10), (0.1, 1, 10)).triples())
        assert len(res.reports) + res.skipped == 1000
        assert all(r.new_bound >= r.triple.r_curv for r in res.reports)
        # the comparison is reported, not asserted; on this grid it always favours the new bound
        assert res.counterexamples == []

    def test_bad_axis(self):
        with pytest.raises(InputDomainError):
            list(GridSpec((1, 0.5, 3), (0.1, 1, 2), (0.1, 1, 2)).triples())
