"""Zeros of generalized Laguerre polynomials and their interlacing under parameter shifts."""

from interlace_lab.analysis import (
    CriticalPointSet,
    InterlacingReport,
    Outcome,
    Status,
    Theorem,
    TheoremVerdict,
    classify_interlacing,
    critical_points,
    verify_theorem,
)
from interlace_lab.identities import IdentityId, check_identity, run_suite
from interlace_lab.laguerre import (
    InvalidParameterError,
    JacobiMatrixData,
    LagParam,
    evaluate,
    evaluate_derivative,
    jacobi_matrix,
)
from interlace_lab.tables import FigureId, TableId, build_figure, build_table
from interlace_lab.zeros import ZeroSet, compute_zeros, detect_common_zeros, zeros_of

__version__ = "0.1.0"

__all__ = [
    "CriticalPointSet",
    "FigureId",
    "IdentityId",
    "InterlacingReport",
    "InvalidParameterError",
    "JacobiMatrixData",
    "LagParam",
    "Outcome",
    "Status",
    "TableId",
    "Theorem",
    "TheoremVerdict",
    "ZeroSet",
    "build_figure",
    "build_table",
    "check_identity",
    "classify_interlacing",
    "compute_zeros",
    "critical_points",
    "detect_common_zeros",
    "evaluate",
    "evaluate_derivative",
    "jacobi_matrix",
    "run_suite",
    "verify_theorem",
    "zeros_of",
]
