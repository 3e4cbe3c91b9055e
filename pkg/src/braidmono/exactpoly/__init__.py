"""Exact polynomial arithmetic over the rationals."""

from braidmono.exactpoly.bivariate import BivariatePoly, evaluate_partial
from braidmono.exactpoly.elimination import discriminant_y, resultant, same_up_to_constant
from braidmono.exactpoly.gaussian import GaussianRational, to_fraction
from braidmono.exactpoly.realimag import (
    RealImagParts,
    VRemainder,
    imaginary_part,
    pseudo_remainder_in_v,
    real_imag_split,
)
from braidmono.exactpoly.univariate import UnivariatePoly

__all__ = [
    "BivariatePoly",
    "GaussianRational",
    "RealImagParts",
    "UnivariatePoly",
    "VRemainder",
    "discriminant_y",
    "evaluate_partial",
    "imaginary_part",
    "pseudo_remainder_in_v",
    "real_imag_split",
    "resultant",
    "same_up_to_constant",
    "to_fraction",
]
