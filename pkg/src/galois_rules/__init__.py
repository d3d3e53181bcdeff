"""Association rule mining on Galois lattices, with global (concept-order) and
local (taxonomy-driven) rule hierarchies."""

from .context import FormalContext, Thresholds, parse_context, serialize_context
from .exportio import Workspace, build_workspace, export
from .hsub import GeneralizedRule, HHierarchy, build_h_hierarchy, h_subsumes
from .lattice import Concept, ConceptLattice, build_lattice
from .msub import MHierarchy, REnsemble, build_m_hierarchy, group_rensembles, m_subsumes, navigate
from .rules import AssociationRule, RuleBase, classify, extract_rules, rule_stats
from .taxonomy import Taxonomy, extended_image, hat_variants, parse_taxonomy

__version__ = "0.1.0"

__all__ = [
    "FormalContext", "Thresholds", "parse_context", "serialize_context",
    "Concept", "ConceptLattice", "build_lattice",
    "AssociationRule", "RuleBase", "extract_rules", "rule_stats", "classify",
    "REnsemble", "MHierarchy", "group_rensembles", "m_subsumes", "build_m_hierarchy", "navigate",
    "Taxonomy", "parse_taxonomy", "extended_image", "hat_variants",
    "GeneralizedRule", "HHierarchy", "h_subsumes", "build_h_hierarchy",
    "Workspace", "build_workspace", "export",
]
