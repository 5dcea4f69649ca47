// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "relbel/random.hpp"

namespace relbel {

// A computation failed numerically (underflowed truncation mass,
// non-convergent iteration, Monte Carlo failure gates).  Distinct from
// std::domain_error, which signals a violated caller contract.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Location-scale-df description of a Student-t law.
struct ScaledTLaw {
  double center = 0.0;
  double scale = 1.0;  // > 0
  double df = 1.0;     // > 0
};

// --- special functions -----------------------------------------------------

// Regularized lower incomplete gamma P(a, x); series / continued fraction.
double regularized_gamma_p(double a, double x);

// Regularized incomplete beta I_x(a, b) by modified Lentz continued fraction.
double regularized_beta(double a, double b, double x);

double std_normal_cdf(double x);
double std_normal_pdf(double x);
// Inverse of std_normal_cdf.  Requires 0 < p < 1.
double std_normal_quantile(double p);

double student_t_cdf(double x, double df);
double student_t_pdf(double x, double df);
double student_t_quantile(double p, double df);

// Gamma distribution in the shape-rate parameterization, so that
// gamma_cdf(x, a, r) == gamma_cdf(r*x, a, 1) exactly.
double gamma_cdf(double x, double shape, double rate);
double gamma_quantile(double p, double shape, double rate);

// --- scaled-t laws ----------------------------------------------------------

double scaled_t_pdf(const ScaledTLaw& law, double x);
double scaled_t_cdf(const ScaledTLaw& law, double x);

// P(a < X <= b) for X ~ law; a may be -inf and b may be +inf.  Computed via
// the survival function when both endpoints sit in the upper tail so that
// small tail masses keep their relative accuracy.
double scaled_t_interval_prob(const ScaledTLaw& law, double a, double b);

// --- sampling ---------------------------------------------------------------

double sample_normal(RandomStream& rng, double mean, double sd);
// Marsaglia-Tsang squeeze; shape-rate parameterization.
double sample_gamma(RandomStream& rng, double shape, double rate);
double sample_chi_squared(RandomStream& rng, double df);

// Inversion sampler: mean + sd * Phi^-1(Phi(a') + [Phi(b') - Phi(a')] u).
// Output lies in (lo, hi].  Throws NumericError when the truncation mass
// underflows instead of returning NaN.
double sample_truncated_normal(RandomStream& rng, double mean, double sd,
                               double lo, double hi);

// --- bivariate t ------------------------------------------------------------

// Log density of the bivariate t_df(mean, scale) law with diagonal scale
// matrix (variance multiplier convention: scale is the t scale matrix, not
// the covariance).
double bivariate_t_logpdf(const std::array<double, 2>& u, double df,
                          const std::array<double, 2>& mean,
                          const std::array<double, 2>& scale_diag);

}  // namespace relbel
