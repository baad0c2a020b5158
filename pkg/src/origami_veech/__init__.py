"""Exact computation of Veech groups and congruence deficiency of origamis.

A square-tiled surface (origami) is a transitive permutation pair
(sigma_a, sigma_b).  This package computes its geometry (genus, stratum,
cylinder decompositions), the SL2(Z) orbit and Veech group data (index,
Schreier generators, cusp widths, Wohlfahrt level), and the congruence
invariants (level index e_m, deficiency f_m) with exact arithmetic
throughout.
"""

from .action import (
    OrbitTable,
    VeechGroupData,
    apply_generator,
    apply_matrix,
    matrix_to_word,
    orbit,
    veech_generators,
)
from .analysis import Cusp, CuspData, CurveProfile, cusp_data, curve_profile
from .congruence import (
    Certificate,
    DeficiencyResult,
    check_lemma13,
    check_thestep,
    coprime_cusp_certificate,
    deficiency,
    image_order,
    is_congruence,
    is_totally_noncongruence,
    parabolic_hull,
    verify_theorem1,
)
from .kernel import backend as kernel_backend
from .perm import Perm, bsgs_order, format_cycles, parse_cycles
from .report import AnalysisReport, analyze
from .sl2 import MatZ, sl2_order
from .surface import (
    BudgetError,
    Cr2,
    L,
    NotReducedError,
    NotTransitiveError,
    Ogn,
    Origami,
    canonical_form,
    classify_h2_orbit,
    cylinders,
    enumerate_origamis,
    format_origami,
    genus,
    integer_weierstrass_count,
    is_reduced,
    parse_origami,
    stratum,
    vertex_data,
    weierstrass_involution,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BudgetError",
    "Certificate",
    "Cr2",
    "Cusp",
    "CuspData",
    "CurveProfile",
    "DeficiencyResult",
    "L",
    "MatZ",
    "NotReducedError",
    "NotTransitiveError",
    "Ogn",
    "OrbitTable",
    "Origami",
    "Perm",
    "VeechGroupData",
    "analyze",
    "apply_generator",
    "apply_matrix",
    "bsgs_order",
    "canonical_form",
    "check_lemma13",
    "check_thestep",
    "classify_h2_orbit",
    "coprime_cusp_certificate",
    "cusp_data",
    "curve_profile",
    "cylinders",
    "deficiency",
    "enumerate_origamis",
    "format_cycles",
    "format_origami",
    "genus",
    "image_order",
    "integer_weierstrass_count",
    "is_congruence",
    "is_reduced",
    "is_totally_noncongruence",
    "kernel_backend",
    "matrix_to_word",
    "orbit",
    "parabolic_hull",
    "parse_cycles",
    "parse_origami",
    "sl2_order",
    "stratum",
    "veech_generators",
    "verify_theorem1",
    "vertex_data",
    "weierstrass_involution",
    "__version__",
]
