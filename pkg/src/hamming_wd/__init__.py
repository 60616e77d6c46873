"""Exact weight distributions of q-ary Hamming codes."""

from .errors import (
    BudgetExceeded,
    DivisibilityViolation,
    DivisionByZero,
    InvalidM,
    NegativeCount,
    NotAPrimePower,
    RankDeficient,
    TooLarge,
)
from .gf import Field, make_field
from .hamming import CodeParams, Matrix, code_params, generator_matrix, parity_check_matrix, projective_points
from .oracles import (
    BivariatePoly,
    brute_force_distribution,
    macwilliams_distribution,
    moment_check,
    simplex_enumerator,
)
from .wdist import WeightDistribution, binary_recurrence_distribution, theorem1_distribution, theorem1_step

__all__ = [
    "BivariatePoly",
    "BudgetExceeded",
    "CodeParams",
    "DivisibilityViolation",
    "DivisionByZero",
    "Field",
    "InvalidM",
    "Matrix",
    "NegativeCount",
    "NotAPrimePower",
    "RankDeficient",
    "TooLarge",
    "WeightDistribution",
    "binary_recurrence_distribution",
    "brute_force_distribution",
    "code_params",
    "generator_matrix",
    "macwilliams_distribution",
    "make_field",
    "moment_check",
    "parity_check_matrix",
    "projective_points",
    "simplex_enumerator",
    "theorem1_distribution",
    "theorem1_step",
]
