"""Braid words, the Artin action and Zariski-van Kampen presentations."""

from braidmono.vankampen.artin import (
    artin_act,
    fixes_boundary_product,
    generator_images,
    relators_from_lasso,
)
from braidmono.vankampen.presentation import (
    affine_presentation,
    assemble_presentation,
    braid_from_crossings,
    projective_relator,
    redundant_lassos,
)
from braidmono.vankampen.words import BraidWord, FreeWord, braid_permutation, product_of_generators

__all__ = [
    "BraidWord",
    "FreeWord",
    "affine_presentation",
    "artin_act",
    "assemble_presentation",
    "braid_from_crossings",
    "braid_permutation",
    "fixes_boundary_product",
    "generator_images",
    "product_of_generators",
    "projective_relator",
    "redundant_lassos",
    "relators_from_lasso",
]
