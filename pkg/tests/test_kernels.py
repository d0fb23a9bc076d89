import numpy as np
import pytest

from kpbound import _accel, kernels
from kpbound.conformal import boundary_quadrature
from kpbound.geometry import RadiiTriple, Stadium, construct_canonical_domain

pytestmark = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")


@pytest.fixture(scope="module")
def quad():
    return boundary_quadrature(construct_canonical_domain(RadiiTriple(0.6, 0.5, 0.4)), 256)


def test_hull_gap_agrees(rng):
    for dom in (Stadium.from_radii(2, 1, 2), Stadium.from_radii(1, 1, 0)):
        pts = rng.uniform(-3, 4, size=(2000, 2))
        g1, n1 = kernels.hull_gap_many_numba(pts, dom.hull_params)
        g2, n2 = kernels.hull_gap_many_numpy(pts, dom.hull_params)
        np.testing.assert_allclose(g1, g2, atol=1e-14)
        np.testing.assert_allclose(n1, n2, atol=1e-12)
        g3 = np.array([kernels.hull_gap_numpy(x, y, dom.hull_params)[0] for x, y in pts[:100]])
        np.testing.assert_allclose(g3, g1[:100], atol=1e-14)


def test_kerzman_stein_system_agrees(quad):
    sw = np.sqrt(quad.weights).astype(complex)
    a = kernels.kerzman_stein_system_numba(quad.nodes, quad.tangents, sw)
    b = kernels.kerzman_stein_system_numpy(quad.nodes, quad.tangents, sw)
    np.testing.assert_allclose(a, b, atol=1e-12)
    # I + skew-hermitian
    m = a - np.eye(a.shape[0])
    np.testing.assert_allclose(m, -m.conj().T, atol=1e-12)


def test_kerzman_stein_apply_agrees(quad, rng):
    vals = rng.normal(size=quad.size) + 1j * rng.normal(size=quad.size)
    w, t = quad.nodes[::7] * 1.0, quad.tangents[::7]
    args = (w, t, quad.nodes, quad.tangents, quad.weights.astype(complex), vals)
    np.testing.assert_allclose(kernels.kerzman_stein_apply_numba(*args),
                               kernels.kerzman_stein_apply_numpy(*args), atol=1e-11)


def test_cauchy_barycentric_agrees(quad, rng):
    targets = 0.3 * (rng.uniform(-1, 1, 300) + 1j * rng.uniform(-1, 1, 300))
    targets = np.concatenate([targets, quad.nodes[:5]])
    vals = np.vstack([quad.nodes, quad.nodes ** 2])
    dz = quad.tangents * quad.weights
    a = kernels.cauchy_barycentric_numba(targets, quad.nodes, dz, vals)
    b = kernels.cauchy_barycentric_numpy(targets, quad.nodes, dz, vals)
    np.testing.assert_allclose(a, b, atol=1e-12)
    # analytic functions are reproduced inside the contour
    np.testing.assert_allclose(a[0], targets, atol=1e-10)
    np.testing.assert_allclose(a[1], targets ** 2, atol=1e-10)


def test_pairs_cover_dispatch():
    for name, (fast, slow) in kernels.PAIRS.items():
        assert getattr(kernels, name) in (fast, slow)
    assert _accel.backend_name() in ("numba", "numpy")
