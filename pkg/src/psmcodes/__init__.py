"""Partially-stuck-cell masking codes with error correction over finite fields."""

from __future__ import annotations

from .bounds import (
    BoundQuery, BoundResult, gv_check, gv_construct, gv_max_d, hamming_bound,
    masking_only_bound, psmc_from_gv, sp_non_overlapping, sp_overlapping, sphere_packing,
    verify_gv,
)
from .channel import TrialReport, inject_errors, run_trials, sample_stuck
from .code import LinearCode, SyndromeDecoder, min_distance_by_columns
from .errors import BudgetExceeded, DecodeFailure, FormatError, PsmcError, ValidationError
from .field import FieldElement, FieldSpec, gf
from .matrix import MatrixF, load_matrix, rref, save_matrix, solve
from .psmc import AllOnePsmc, PsmcScheme, StuckProfile, build_scheme, example1_scheme, load_scheme

__version__ = "0.1.0"

__all__ = [
    "AllOnePsmc", "BoundQuery", "BoundResult", "BudgetExceeded", "DecodeFailure", "FieldElement",
    "FieldSpec", "FormatError", "LinearCode", "MatrixF", "PsmcError", "PsmcScheme", "StuckProfile",
    "SyndromeDecoder", "TrialReport", "ValidationError", "build_scheme", "example1_scheme", "gf",
    "gv_check", "gv_construct", "gv_max_d", "hamming_bound", "inject_errors", "load_matrix",
    "load_scheme", "masking_only_bound", "min_distance_by_columns", "psmc_from_gv", "rref",
    "run_trials", "sample_stuck", "save_matrix", "solve", "sp_non_overlapping", "sp_overlapping",
    "sphere_packing", "verify_gv",
]
