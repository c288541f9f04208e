"""Exact modular representation theory of small finite groups.

Finite fields with Conway moduli, dense linear algebra over F_q, matrix
groups, representations with induction/restriction, the Meataxe, Brauer
characters, and checks of Clifford correspondence statements.
"""

from .brauer import brauer_character, brauer_table, character_key, enumerate_irreducibles, lift_eigenvalues
from .clifford import (
    SUITE,
    clifford_correspondence,
    clifford_restrict,
    extension_search,
    green_verify,
    induced_irreducibility_check,
    inertia_group,
    res_ind_decompose,
    suite_pair,
)
from .cyclotomic import CyclotomicInt
from .field import FieldElement, embed, make_field
from .group import Group, make_GL2, make_SL2, named_group, p_regular_classes
from .linalg import Matrix
from .rep import Representation, from_generator_images, induce, natural, restrict, tensor, trivial
from .sl2gl2 import emit_paper_tables, pol_k, pol_k_r, verify_section2
from .structure import composition_factors, hom_space, is_irreducible, multiplicity_in_semisimple

__version__ = "0.1.0"

__all__ = [
    "brauer_character",
    "brauer_table",
    "character_key",
    "clifford_correspondence",
    "clifford_restrict",
    "composition_factors",
    "CyclotomicInt",
    "embed",
    "emit_paper_tables",
    "enumerate_irreducibles",
    "extension_search",
    "FieldElement",
    "from_generator_images",
    "green_verify",
    "Group",
    "hom_space",
    "induce",
    "induced_irreducibility_check",
    "inertia_group",
    "is_irreducible",
    "lift_eigenvalues",
    "make_field",
    "make_GL2",
    "make_SL2",
    "Matrix",
    "multiplicity_in_semisimple",
    "named_group",
    "natural",
    "p_regular_classes",
    "pol_k",
    "pol_k_r",
    "Representation",
    "res_ind_decompose",
    "restrict",
    "SUITE",
    "suite_pair",
    "tensor",
    "trivial",
    "verify_section2",
]
