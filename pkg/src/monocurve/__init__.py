"""Exact-arithmetic invariants of numerical semigroups, projective monomial
curves and h-fold sumsets, with independent brute-force verification."""

from .bounds import BoundEntry, BoundReport, bound_report
from .curve import (
    CohomologyProfile,
    CurveProfile,
    CurveSpec,
    HilbertData,
    WEntry,
    build_profile,
    classify_special,
    first_cohomology,
    h1_graded_dimension,
    h2_graded_dimension,
    hilbert,
    is_buchsbaum,
    is_cohen_macaulay,
)
from .errors import InputError, RangeError
from .semigroup import (
    AperyTable,
    DegreeTable,
    GapProfile,
    GeneratorSet,
    apery,
    degree,
    degree_table,
    frobenius,
    gap_profile,
    gap_profile_of,
    membership,
)
from .sumsets import (
    CAP_EXCEEDED,
    SumsetReport,
    h_fold_sumset,
    sigma_bounds,
    sigma_bruteforce,
    sigma_formula,
    structure_decomposition,
    sumset_report,
    stabilization_threshold,
)

__all__ = [
    "AperyTable",
    "BoundEntry",
    "BoundReport",
    "CAP_EXCEEDED",
    "CohomologyProfile",
    "CurveProfile",
    "CurveSpec",
    "DegreeTable",
    "GapProfile",
    "GeneratorSet",
    "HilbertData",
    "InputError",
    "RangeError",
    "SumsetReport",
    "WEntry",
    "apery",
    "bound_report",
    "build_profile",
    "classify_special",
    "degree",
    "degree_table",
    "first_cohomology",
    "frobenius",
    "gap_profile",
    "gap_profile_of",
    "h1_graded_dimension",
    "h2_graded_dimension",
    "h_fold_sumset",
    "hilbert",
    "is_buchsbaum",
    "is_cohen_macaulay",
    "membership",
    "sigma_bounds",
    "sigma_bruteforce",
    "sigma_formula",
    "structure_decomposition",
    "sumset_report",
    "stabilization_threshold",
]

__version__ = "1.0.0"
