"""Finite Coxeter groups, Bruhat graphs, and their discrete curvature."""

from .coxeter import (
    CoxeterMatrix,
    DegenerateTypeError,
    SpecError,
    bilinear_form,
    is_finite_type,
    load_matrix_file,
    parse_spec,
)
from .curvature import (
    CurvatureReport,
    GlobalCurvatureReport,
    LocalFunction,
    delta_op,
    gamma2_def,
    gamma2_formula,
    gamma_op,
    global_ricci,
    local_ricci,
)
from .dihedral import classes, g_u, maximal_dihedral, verify_structure
from .graphs import Graph
from .groups import Group, GroupTooLargeError, build_group, generate_group
from .isoperimetry import IsoResult, verify_isoperimetry
from .roots import RootSystem, generate_roots
from .spectral import GraphTooLargeError, SpectralReport, spectral_gap

__version__ = "0.1.0"

__all__ = [
    "CoxeterMatrix",
    "CurvatureReport",
    "DegenerateTypeError",
    "GlobalCurvatureReport",
    "Graph",
    "GraphTooLargeError",
    "Group",
    "GroupTooLargeError",
    "IsoResult",
    "LocalFunction",
    "RootSystem",
    "SpecError",
    "SpectralReport",
    "__version__",
    "bilinear_form",
    "build_group",
    "classes",
    "delta_op",
    "g_u",
    "gamma2_def",
    "gamma2_formula",
    "gamma_op",
    "generate_group",
    "generate_roots",
    "global_ricci",
    "is_finite_type",
    "load_matrix_file",
    "local_ricci",
    "maximal_dihedral",
    "parse_spec",
    "spectral_gap",
    "verify_isoperimetry",
    "verify_structure",
]
