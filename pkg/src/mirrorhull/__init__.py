"""mirrorhull: volume of the convex hull of a regular simplex and its mirror
image in a supporting hyperplane.

The ratio Vol(conv(S, S^H)) / Vol(S) equals 2n whenever the hyperplane's inner
normal is the vertex direction u_0, and for n <= 4 that is the maximum over all
supporting hyperplanes.  In dimension 5 a rotated position beats it, with ratio
10(1/2 + sqrt(77)/(10 sqrt(3))) ~ 10.06623; dimensions 6..8 are open, and the
optimizer reports conjecture data for them.
"""

from .cases import (
    CaseRecord,
    Construction5D,
    Decomposition5D,
    build_construction_5d,
    case_record,
    check_recorded_constants,
    decomposition_5d,
    f_upper_bound,
    g4,
    g5,
    g5_max_exact,
    h5,
    phi_max_exact,
)
from .hull import Facet, Polytope, hull_ratio, hull_volume, monte_carlo_volume, simplex_measure
from .hyperplane import SupportHyperplane, UpperFacetSet, project, reflect, support_from_direction, upper_facets
from .kernels import BACKEND
from .optimize import OptResult, optimize, phi_family_ratio, sweep_r_family
from .prism import RatioReport, f_value, ratio_formula
from .simplex import (
    RegularSimplex,
    SimplexConstants,
    build_simplex,
    facet_normal,
    r_family_normal,
    simplex_constants,
    simplex_from_vertices,
    simplex_volume,
)

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "CaseRecord",
    "Construction5D",
    "Decomposition5D",
    "Facet",
    "OptResult",
    "Polytope",
    "RatioReport",
    "RegularSimplex",
    "SimplexConstants",
    "SupportHyperplane",
    "UpperFacetSet",
    "build_construction_5d",
    "build_simplex",
    "case_record",
    "check_recorded_constants",
    "decomposition_5d",
    "f_upper_bound",
    "f_value",
    "facet_normal",
    "g4",
    "g5",
    "g5_max_exact",
    "h5",
    "hull_ratio",
    "hull_volume",
    "monte_carlo_volume",
    "optimize",
    "phi_family_ratio",
    "phi_max_exact",
    "project",
    "r_family_normal",
    "ratio_formula",
    "reflect",
    "simplex_constants",
    "simplex_from_vertices",
    "simplex_measure",
    "simplex_volume",
    "support_from_direction",
    "sweep_r_family",
    "upper_facets",
]
