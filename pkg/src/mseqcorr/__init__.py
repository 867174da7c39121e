"""Exact cross-correlation spectra of m-sequences and their decimations.

Everything numeric is exact: spectrum values live in Z[zeta_p] with Python
integer coordinates, and every closed-form claim is verified by exhaustive
computation against an independent engine.
"""

from .cyclo import CycInt
from .field import FieldContext, FieldElement, FieldError, build_field
from .primpoly import find_primitive_poly, is_irreducible
from .characters import additive_char, gauss_sum, quadratic_sum
from .spectrum import (
    DecimationCase,
    MomentReport,
    SpectrumDistribution,
    b3_count,
    cross_correlation_direct,
    msequence,
    spectrum,
    verify_moments,
    weil_sum,
    weil_values,
    weil_values_rational,
)
from .ternary import (
    TernaryParams,
    lemma6_count,
    ternary_params,
    theorem4_distribution,
    trace_form_check,
    verify_theorem4,
)
from .binary import (
    BinaryParamError,
    BinaryParams,
    binary_params,
    cc_from_counts,
    l2_structure,
    n_counts,
    theorem9_verify,
)
from .suite import CriterionResult, run_suite

__version__ = "1.0.0"

__all__ = [
    "CycInt",
    "FieldContext",
    "FieldElement",
    "FieldError",
    "build_field",
    "find_primitive_poly",
    "is_irreducible",
    "additive_char",
    "gauss_sum",
    "quadratic_sum",
    "DecimationCase",
    "MomentReport",
    "SpectrumDistribution",
    "b3_count",
    "cross_correlation_direct",
    "msequence",
    "spectrum",
    "verify_moments",
    "weil_sum",
    "weil_values",
    "weil_values_rational",
    "TernaryParams",
    "lemma6_count",
    "ternary_params",
    "theorem4_distribution",
    "trace_form_check",
    "verify_theorem4",
    "BinaryParamError",
    "BinaryParams",
    "binary_params",
    "cc_from_counts",
    "l2_structure",
    "n_counts",
    "theorem9_verify",
    "CriterionResult",
    "run_suite",
    "__version__",
]
