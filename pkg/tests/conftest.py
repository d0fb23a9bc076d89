import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_valid_triple(rng, min_curv_frac=0.25):
    """A valid (R_O, R_I, R_C) with R_C >= min_curv_frac * R_O."""
    from kpbound.geometry import RadiiTriple, validate_radii

    while True:
        ro = rng.uniform(0.5, 3.0)
        rc = rng.uniform(min_curv_frac, 1.0) * ro
        d = ro - rc
        ri = rng.uniform(max(rc - d, 1e-3), min(rc + d, ro))
        t = RadiiTriple(ro, ri, rc)
        if validate_radii(t):
            return t
