"""Positive block-Toeplitz coefficient data and matrix-valued Herglotz
functions: assembly and certification, one-step central extension,
truncated-data interpolation, positive kernels, state-space realization
oracles, and reduction to a minimal base-factor form.
"""

from .exceptions import (
    DimensionError,
    DomainError,
    FactorizationMismatchError,
    FixtureError,
    InsufficientDataError,
    NotHermitianError,
    NotPsdError,
    OutOfBallError,
    ProblemFormatError,
    RangeCompatibilityError,
    SingularBlockError,
)
from .extension import (
    ExtensionStep,
    ball_membership,
    central_step,
    extend,
    parametrized_step,
    solve_cf,
)
from .io import (
    ProblemFile,
    RunConfig,
    load_problem,
    parse_problem,
    save_problem,
    serialize_problem,
)
from .linalg import (
    Factorization,
    PsdReport,
    SchurSplit,
    connecting_isometry,
    hermitian_split,
    minimal_factorization,
    psd_report,
    schur_split,
)
from .series import (
    GramFactor,
    HerglotzSeries,
    Realization,
    ReducedForm,
    certified_series,
    compose_reduced,
    eval_realization,
    eval_series,
    gram_isometries,
    kernel_gram,
    kernel_finite_section,
    kernel_value,
    random_realization,
    realization_coefficients,
    reduce,
    series_tail_bound,
)
from .toeplitz import (
    BlockToeplitz,
    CoefficientSequence,
    assemble,
    cross_block_bound_check,
    positivity_profile,
    reversal_conjugate,
    reverse_blocks,
)

__version__ = "0.1.0"

__all__ = [
    "BlockToeplitz",
    "CoefficientSequence",
    "DimensionError",
    "DomainError",
    "ExtensionStep",
    "Factorization",
    "FactorizationMismatchError",
    "FixtureError",
    "GramFactor",
    "HerglotzSeries",
    "InsufficientDataError",
    "NotHermitianError",
    "NotPsdError",
    "OutOfBallError",
    "ProblemFile",
    "ProblemFormatError",
    "PsdReport",
    "Realization",
    "RangeCompatibilityError",
    "ReducedForm",
    "RunConfig",
    "SchurSplit",
    "SingularBlockError",
    "assemble",
    "ball_membership",
    "central_step",
    "certified_series",
    "compose_reduced",
    "connecting_isometry",
    "cross_block_bound_check",
    "eval_realization",
    "eval_series",
    "extend",
    "gram_isometries",
    "hermitian_split",
    "kernel_gram",
    "kernel_finite_section",
    "kernel_value",
    "load_problem",
    "minimal_factorization",
    "parametrized_step",
    "parse_problem",
    "positivity_profile",
    "psd_report",
    "random_realization",
    "realization_coefficients",
    "reduce",
    "reversal_conjugate",
    "reverse_blocks",
    "save_problem",
    "schur_split",
    "serialize_problem",
    "series_tail_bound",
    "solve_cf",
]
