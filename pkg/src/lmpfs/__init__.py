"""Locally maximal product-free sets and filled groups in small finite groups.

A subset S of a finite group is product-free when no product of two of its
members lands back in S, locally maximal when no product-free superset
exists, and it fills the group when S together with SS covers every
non-identity element.  A group in which every locally maximal product-free
set fills is called filled.  This package enumerates such sets exhaustively
for groups of order up to 64 (Cayley-table encoded), classifies them up to
automorphism, and decides the filled property with machine-checked
witnesses.
"""

from ._kernel import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .catalog import (CatalogEntry, GroupSpec, builtin_specs,
                      default_catalog_dir, group_from_json_dict,
                      group_to_json_dict, load_catalog, load_group_file,
                      parse_spec)
from .dihedral import (DihedralView, QuotientWitnessChain, SWConstruction,
                       not_filled_by_quotient, reflection_coverage,
                       rot_ref_split, size_bound, sw_construction)
from .enumeration import (ClassificationReport, FilledVerdict, Orbit,
                          ScanEntry, canonical_form, classify_up_to_aut,
                          enumerate_lmpfs, filled_summary, is_filled,
                          min_lmpfs_size, scan_filled)
from .errors import CapacityError, GroupValidationError, SpecParseError
from .groups import (Automorphism, Group, automorphisms, direct_product,
                     element_meta, make_cyclic, make_dihedral,
                     make_elementary_abelian_2, make_generalized_quaternion,
                     normal_subgroups, quotient, subgroups)
from .notation import element_label, parse_set_literal, set_label
from .pfs import (SetAnalysis, analyze, fills, index5_witness,
                  is_locally_maximal, is_locally_maximal_definitional,
                  is_product_free, lift_from_quotient, quaternion_witness,
                  set_inverse, set_product, sqrt_set, t_closure)
from .sets import ElementSet

__version__ = "0.1.0"

__all__ = [
    "Automorphism", "CapacityError", "CatalogEntry", "ClassificationReport",
    "DihedralView", "ElementSet", "FilledVerdict", "Group",
    "GroupSpec", "GroupValidationError", "KERNEL_IMPLEMENTATION", "Orbit",
    "QuotientWitnessChain", "SWConstruction", "ScanEntry", "SetAnalysis",
    "SpecParseError", "analyze", "automorphisms", "builtin_specs",
    "canonical_form", "classify_up_to_aut", "default_catalog_dir",
    "direct_product", "element_label", "element_meta", "enumerate_lmpfs",
    "filled_summary", "fills", "group_from_json_dict", "group_to_json_dict",
    "index5_witness", "is_filled", "is_locally_maximal",
    "is_locally_maximal_definitional", "is_product_free", "lift_from_quotient",
    "load_catalog", "load_group_file", "make_cyclic", "make_dihedral",
    "make_elementary_abelian_2", "make_generalized_quaternion",
    "min_lmpfs_size", "normal_subgroups", "not_filled_by_quotient",
    "parse_set_literal", "parse_spec", "quaternion_witness", "quotient",
    "reflection_coverage", "rot_ref_split", "scan_filled", "set_inverse",
    "set_label", "set_product", "size_bound", "sqrt_set", "subgroups",
    "sw_construction", "t_closure",
]
