"""Newton-Puiseux expansions and A_n singularity recognition."""

from braidmono.newtonpuiseux.classify import (
    FiberPointType,
    SingularityType,
    VerticalTangency,
    branch_intersection,
    classify_fiber_point,
    classify_simple_singularity,
    fiber_singular_points,
    leading_form_after_substitution,
    local_braid_exponent,
    local_contributions,
    local_discriminant_contribution,
)
from braidmono.newtonpuiseux.puiseux import (
    AlgebraicCoefficient,
    PuiseuxBranch,
    algebraic_coefficient,
    intersection_with_vertical,
    newton_polygon_edges,
    puiseux_expansions,
)

__all__ = [
    "AlgebraicCoefficient",
    "FiberPointType",
    "PuiseuxBranch",
    "SingularityType",
    "VerticalTangency",
    "algebraic_coefficient",
    "branch_intersection",
    "classify_fiber_point",
    "classify_simple_singularity",
    "fiber_singular_points",
    "intersection_with_vertical",
    "leading_form_after_substitution",
    "local_braid_exponent",
    "local_contributions",
    "local_discriminant_contribution",
    "newton_polygon_edges",
    "puiseux_expansions",
]
