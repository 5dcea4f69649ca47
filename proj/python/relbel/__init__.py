# Copyright 2026 relbel contributors
# SPDX-License-Identifier: Apache-2.0
"""Relative-belief equivalence and noninferiority analysis for two-arm
normal trials.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._relbel import (  # noqa: F401
    Hyperparameters,
    NumericError,
    ScaledTLaw,
    SufficientStats,
    __version__,
    analyze,
    bias_report,
    check_prior,
    elicit,
    gamma_cdf,
    gamma_quantile,
    interval_hypothesis,
    posterior_difference_law,
    prior_difference_law,
    qq_points,
    rb_analysis,
    scaled_t_interval_prob,
    shapiro_wilk,
    std_normal_cdf,
    std_normal_quantile,
    student_t_cdf,
    student_t_pdf,
    sufficient_stats,
)
