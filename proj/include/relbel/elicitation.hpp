// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace relbel {

// Virtual-certainty inputs from a subject-matter expert: an interval
// (m1, m2) believed to contain both treatment means, and lower/upper bounds
// s1_sq < s2_sq on the squared half-length of an interval that contains any
// single measurement, all at certainty level gamma_vc.
struct ElicitationSpec {
  double m1 = 0.0;
  double m2 = 0.0;
  double s1_sq = 0.0;
  double s2_sq = 0.0;
  double gamma_vc = 0.999;
};

// Conjugate prior: mu_E, mu_R | sigma^2 ~ N(mu0, tau0_sq sigma^2) and
// 1/sigma^2 ~ Gamma(alpha0, beta0) in shape-rate form.
struct Hyperparameters {
  double mu0 = 0.0;
  double tau0_sq = 1.0;
  double alpha0 = 1.0;
  double beta0 = 1.0;
};

struct LocationElicitation {
  double mu0 = 0.0;
  double tau0_sq = 0.0;
};

struct VarianceElicitation {
  double alpha0 = 0.0;
  double beta0 = 0.0;
  // relative residuals of the two defining quantile equations at the solution
  double residual_upper = 0.0;
  double residual_lower = 0.0;
};

// mu0 = (m1+m2)/2, tau0_sq = ((m2-m1)/2)^2 / s2_sq.
LocationElicitation elicit_location(const ElicitationSpec& spec);

// Solves, with z = Phi^-1((1+gamma)/2):
//   gamma_quantile((1+gamma)/2, alpha0, beta0) = z^2 / s1_sq
//   gamma_quantile((1-gamma)/2, alpha0, beta0) = z^2 / s2_sq
// The quantile ratio at rate 1 is strictly decreasing in alpha0, so alpha0 is
// bisected to match s2_sq/s1_sq (bracket [1e-3, 1e3], geometric expansion to
// [1e-8, 1e8], 200 iterations) and beta0 follows from the upper equation.
VarianceElicitation elicit_variance(const ElicitationSpec& spec);

Hyperparameters elicit(const ElicitationSpec& spec);

void validate(const Hyperparameters& hyper);

}  // namespace relbel
