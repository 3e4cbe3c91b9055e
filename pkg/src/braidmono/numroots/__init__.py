"""Certified root isolation and refinement for exact univariate polynomials."""

from braidmono.numroots.disks import (
    ComplexDisk,
    RootConfiguration,
    dyadic_below,
    make_context,
    mpf_to_fraction,
)
from braidmono.numroots.isolation import (
    approximate_roots,
    isolate_complex_roots,
    refine_root,
    smith_disks,
)
from braidmono.numroots.realroots import (
    RealRootInterval,
    count_real_roots,
    real_roots_in_interval,
    sturm_count,
)

__all__ = [
    "ComplexDisk",
    "RealRootInterval",
    "RootConfiguration",
    "approximate_roots",
    "count_real_roots",
    "dyadic_below",
    "isolate_complex_roots",
    "make_context",
    "mpf_to_fraction",
    "real_roots_in_interval",
    "refine_root",
    "smith_disks",
    "sturm_count",
]
