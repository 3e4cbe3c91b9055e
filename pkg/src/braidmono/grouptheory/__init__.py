"""Post-processing of finitely presented groups."""

from braidmono.grouptheory.abelian import AbelianInvariants, abelianization, smith_invariants
from braidmono.grouptheory.alexander import alexander_polynomial, fox_derivative, fox_jacobian
from braidmono.grouptheory.cosets import CosetResult, coset_enumeration_order
from braidmono.grouptheory.epimorphisms import find_epimorphisms, has_epimorphism
from braidmono.grouptheory.finite import FiniteGroupTable, named_group
from braidmono.grouptheory.identify import Order30Verdict, identify_order30, verify_witness
from braidmono.grouptheory.presentation import GroupPresentation
from braidmono.grouptheory.tietze import SimplifiedPresentation, TietzeLimits, tietze_simplify

__all__ = [
    "AbelianInvariants",
    "CosetResult",
    "FiniteGroupTable",
    "GroupPresentation",
    "Order30Verdict",
    "SimplifiedPresentation",
    "TietzeLimits",
    "abelianization",
    "alexander_polynomial",
    "coset_enumeration_order",
    "find_epimorphisms",
    "fox_derivative",
    "fox_jacobian",
    "has_epimorphism",
    "identify_order30",
    "named_group",
    "smith_invariants",
    "tietze_simplify",
    "verify_witness",
]
