"""Acceptance suite: one PASS/FAIL line per criterion, at the stated tolerances.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines are also
written to the terminal.
"""

import math
import time

import numpy as np
import pytest

from kpbound.bounds import main_bound, old_bound, sharp_disk_bound
from kpbound.conformal import DEFAULT_RESOLUTION, exact_disk_map, numeric_conformal_map
from kpbound.extremal import extremal_disk, kp_length_numeric
from kpbound.geometry import (Disk, Point2, RadiiTriple, Stadium, Strip, construct_canonical_domain,
                              sample_interior)
from kpbound.metrics import (CaseTag, continuity_threshold, kp_branch_extremal_constant,
                             kp_branch_sector_composite, kp_distance_stadium_centers, stadium_angle)
from kpbound.verify import check_main_bound, empirical_sup_derivative, sandwich_check

from conftest import random_valid_triple

SEED = 7


@pytest.fixture
def report(request):
    tr = request.config.pluginmanager.getplugin("terminalreporter")

    def emit(n, ok, detail):
        line = f"[acceptance {n}] {'PASS' if ok else 'FAIL'}  {detail}"
        if tr is not None:
            tr.write_line("")
            tr.write_line(line)
        else:  # pragma: no cover
            print(line)
        assert ok, line
    return emit


def test_1_rounded_triangle(report):
    t = RadiiTriple(0.6, 0.5, 0.4)
    new, old = main_bound(t).new_bound, old_bound(t)
    ok = round(new, 3) == 0.931 and round(old, 3) == 0.977
    report(1, ok, f"rounded triangle: new {new:.3f} (0.931), old {old:.3f} (0.977)")


def test_2_disk_example(report):
    t = RadiiTriple(3, 1, 2)
    new, old = main_bound(t).new_bound, old_bound(t)
    ok = abs(new - 6) <= 1e-9 and abs(old - 8) <= 1e-9
    report(2, ok, f"disk example: new {new:.12g} (6), old {old:.12g} (8), tol 1e-9")


def test_3_sharpness(report):
    rng = np.random.default_rng(SEED)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(20):
        r = rng.uniform(0.1, 10.0)
        a = rng.uniform(0.0, 0.99) * r
        est = empirical_sup_derivative(exact_disk_map(a, r), 4096).value
        worst = max(worst, abs(est - sharp_disk_bound(a, r)) / sharp_disk_bound(a, r))
    elapsed = time.perf_counter() - start
    report(3, worst <= 1e-6 and elapsed < 1.0,
           f"sharpness on 20 random disks: max rel err {worst:.2e} (<=1e-6), {elapsed:.2f}s (<1s)")


STADIUMS = [(1, 1, 3), (0.7, 0.7, 1.2), (2, 1, 1), (5, 1, 4), (2, 1, 2), (2, 1, 1.9), (1.5, 0.5, 1.5)]


def test_4_oracle_equivalence(report):
    start = time.perf_counter()
    worst, tags = 0.0, set()
    for R, r, d in STADIUMS:
        exact, branch = kp_distance_stadium_centers(R, r, d)
        tags.add(branch.tag)
        got = kp_length_numeric(Stadium.from_radii(R, r, d), (0, 0), (d, 0)).length.value
        worst = max(worst, abs(got - exact.value) / exact.value)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-2 and elapsed < 60 and tags == set(CaseTag)
    report(4, ok, f"numeric KP length vs closed form on {len(STADIUMS)} stadiums, "
                  f"{len(tags)}/3 branches: max rel err {worst:.2e} (<=1e-2), {elapsed:.1f}s (<60s)")


def test_5_case_continuity(report):
    worst = 0.0
    for big in np.linspace(0.2, 5.0, 10):
        for frac in np.linspace(0.1, 0.9, 5):
            small = frac * big
            d = continuity_threshold(big, small)
            theta = stadium_angle(big, small, d)
            worst = max(worst, abs(kp_branch_extremal_constant(big, d)
                                   - kp_branch_sector_composite(big, small, theta)))
    report(5, worst <= 1e-9, f"branch continuity on 50 (R, r) pairs: max gap {worst:.2e} (<=1e-9)")


def test_6_monotonicity(report):
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(10):
        big = rng.uniform(0.2, 5.0)
        small = rng.uniform(0.05, 1.0) * big
        ds = np.linspace(0.0, 10.0 * big, 1000)
        vals = np.array([kp_distance_stadium_centers(big, small, d)[0].value for d in ds])
        worst = max(worst, float(-np.diff(vals).min()))
    report(6, worst <= 1e-12, f"monotone in d, 10 pairs x 1000 d: largest decrease {max(worst, 0):.2e} (<=1e-12)")


def test_7_sandwich(report):
    start = time.perf_counter()
    dom = construct_canonical_domain(RadiiTriple(0.6, 0.5, 0.4))
    fmap = numeric_conformal_map(dom, DEFAULT_RESOLUTION)
    pts = sample_interior(dom, 50, np.random.default_rng(SEED), min_clearance=1e-3)
    reps = [sandwich_check(dom, p, fmap=fmap, tol=0.02) for p in pts]
    failed = sum(not r.passed for r in reps)
    lo = min(r.hyperbolic / r.kp for r in reps)
    hi = max(r.hyperbolic / r.kp for r in reps)
    elapsed = time.perf_counter() - start
    report(7, failed == 0 and elapsed < 300,
           f"KP sandwich at 50 canonical points: lambda/mu in [{lo:.4f}, {hi:.4f}] "
           f"(within [0.5, 1] +-2%), {failed} failures, {elapsed:.1f}s (<300s)")


def test_8_main_bound_holds(report):
    rng = np.random.default_rng(SEED)
    triples = [RadiiTriple(0.6, 0.5, 0.4), RadiiTriple(3, 1, 2), RadiiTriple(1, 1, 1)]
    triples += [random_valid_triple(rng) for _ in range(5)]
    start = time.perf_counter()
    reps = [check_main_bound(t) for t in triples]
    elapsed = time.perf_counter() - start
    failed = [r.triple for r in reps if not r.passed]
    worst = max(r.empirical_sup / r.bound_value for r in reps)
    report(8, not failed and elapsed < 600,
           f"main bound on {len(reps)} canonical domains: max sup/bound {worst:.6f} (<=1.001), "
           f"{len(failed)} failures, {elapsed:.1f}s (<600s)")


def test_9_solver_fixtures(report):
    start = time.perf_counter()
    worst = 0.0
    disk = Disk(Point2(0.3, -0.2), 1.5)
    for z in [(0.3, -0.2), (1.0, 0.4), (-0.9, -0.9)]:
        res = extremal_disk(disk, z)
        worst = max(worst, (res.disk.center - disk.center).norm(), abs(res.disk.radius - disk.radius))
    strip = Strip(1.0)
    for x in [-4.0, 0.0, 2.5]:
        res = extremal_disk(strip, (x, 0.0))
        worst = max(worst, (res.disk.center - Point2(x, 0.0)).norm(), abs(res.disk.radius - 1.0))
    elapsed = time.perf_counter() - start
    report(9, worst <= 1e-6 and elapsed < 10,
           f"extremal disk fixtures (disk itself, strip D(x,1)): max center/radius err {worst:.2e} "
           f"(<=1e-6), {elapsed:.2f}s (<10s)")
