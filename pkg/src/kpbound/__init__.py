"""Kulkarni-Pinkall, hyperbolic and quasihyperbolic metrics on convex domains,
with the derivative bound ``R_C exp(2F)`` and tools to check it numerically."""

from .bounds import (BoundReport, distance_bound_F, main_bound, old_bound, old_bound_disk_ratio,
                     sharp_disk_bound, sweep_bounds)
from .conformal import ConformalMapHandle, exact_disk_map, numeric_conformal_map
from .errors import (BoundaryDivergenceError, ConvergenceError, DomainRepresentationError,
                     ExteriorPointError, InputDomainError, InvalidRadiiError, KPBoundError)
from .extremal import (ContactComponent, ExtremalDiskResult, PathLengthResult, contact_set,
                       extremal_disk, kp_density_numeric, kp_length_numeric)
from .geometry import (BoundaryPoint, Disk, DiskUnionDomain, Point2, RadiiTriple, SectorSpec,
                       Stadium, Strip, construct_canonical_domain, distance_to_boundary,
                       find_touching_disk, stadium_boundary, stadium_sector, validate_radii)
from .metrics import (CaseTag, KPCaseBranch, MetricKind, MetricValue, Provenance,
                      hyperbolic_density_disk, hyperbolic_distance_disk_radial,
                      kp_density_sector_axis, kp_density_strip, kp_distance_stadium_centers,
                      phi, quasihyperbolic_density)
from .verify import (VerificationReport, check_distance_bound, check_main_bound,
                     empirical_sup_derivative, sandwich_check)

__version__ = "0.1.0"
