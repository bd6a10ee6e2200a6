# Copyright 2026 The fasp Authors
# SPDX-License-Identifier: Apache-2.0
"""Fuzzy life-test acceptance sampling plans."""

from ._core import (
    ConvergenceError,
    DomainError,
    FuzzyLife,
    InfeasibleError,
    InputError,
    TriProb,
    case_study_data,
    censored_mle,
    crisp_baseline,
    design,
    dispose,
    expected_y,
    expected_y_upper_bound,
    oracle,
    rgsp_max_triprob,
    rgsp_min_triprob,
    ssp_triprob,
    typeI_triprob,
    verify_tables_json,
    weighted_survival,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "FuzzyLife",
    "InfeasibleError",
    "InputError",
    "TriProb",
    "case_study_data",
    "censored_mle",
    "crisp_baseline",
    "design",
    "dispose",
    "expected_y",
    "expected_y_upper_bound",
    "oracle",
    "rgsp_max_triprob",
    "rgsp_min_triprob",
    "ssp_triprob",
    "typeI_triprob",
    "verify_tables_json",
    "weighted_survival",
]
