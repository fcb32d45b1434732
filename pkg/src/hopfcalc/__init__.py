"""Exact computations with finite-dimensional Hopf algebras and bicrossed products."""

from .algebra import (AlgebraError, HopfAlgebra, change_basis, check_bialgebra_map,
                      check_coalgebra_map, check_hopf_axioms, dual, tensor_product, twist)
from .bicrossed import bicrossed_product
from .double import canonical_double_actions, drinfeld_double
from .field import Field, FieldError, Q
from .matched_pair import (Action, MatchedPair, canonical_pair, census_h4h4,
                           check_matched_pair, check_module_coalgebra,
                           enumerate_matched_pairs_h4h4, trivial_pair)
from .morphism import (CoalgebraMapFamily, GroupReport, MorphismQuadruple, are_isomorphic,
                       assemble_morphism, automorphism_group, hopf_maps, solve_quadruples,
                       unitary_coalgebra_maps)
from .presets import (group_algebra_c2, h4_tensor_h4, h16_lambda, sweedler_h4,
                      verify_presentation)
from .probe import group_likes, integrals, is_semisimple, skew_primitives
from .report import Report

__version__ = "0.1.0"
