"""Finite strict 2-categories and their homotopy-level combinatorics."""

from .core import (TwoCategory, TwoFunctor, TwoNaturalTransformation,
                   OplaxTransformation, Modification, TwoDiagram,
                   DiagramMorphism, DiagramModification, ValidationReport,
                   TwoCatError, validate, check_cell_map, opposite, product,
                   coproduct, hom_category, terminal, discrete,
                   validate_diagram, validate_diagram_morphism,
                   constant_diagram, identity_functor, compose_functors,
                   COVARIANT, CONTRAVARIANT)
from .builders import walking_arrow, walking_two_cell, pt
from .simplicial import (TruncatedSimplicialSet, TruncatedBisimplicialSet,
                         TruncatedTrisimplicialSet, SimplicialMap,
                         check_simplicial_identities, check_simplicial_map,
                         diag, tri_diag, wbar, aw_map, verify_iso, transpose)
from .nerves import (nerve_category, double_nerve, wbar_double_nerve,
                     nerve_simplicial_twocat, repackage_staircase, diag_nn,
                     diag_nn_map)
from .grothendieck import (grothendieck, grothendieck_morphism,
                           grothendieck_modification, fibre_embedding,
                           base_change, pullback_diagram, projection_functor)
from .hocolim import (SimplicialTwoCategory, hocolim, hocolim_map,
                      hocolim_modification, build_E, build_E_pull,
                      hocolim_wbar_comparison, grothendieck_wbar_comparison,
                      check_simplicial_two_category, reversal_bridge_report)
from .comma import (OVER, UNDER, comma, comma_projection, fibre_diagram,
                    induced_fibre_functor, induced_fibre_transformation,
                    projections, representable_diagram, retraction_R,
                    section_jz_iz, comma_base_change)
from .homology import (ChainComplex, HomologyResult, normalized_chain_complex,
                       homology, induced_homology_map, is_homology_iso_upto,
                       smith_normal_form)
from .corpus import corpus

__all__ = [n for n in dir() if not n.startswith("_")]
