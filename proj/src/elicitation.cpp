// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include "relbel/elicitation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "relbel/distributions.hpp"

namespace relbel {

namespace {

void validate(const ElicitationSpec& spec) {
  if (!(spec.m1 < spec.m2)) {
    throw std::domain_error("elicitation: requires m1 < m2");
  }
  if (!(spec.s1_sq > 0.0) || !(spec.s1_sq < spec.s2_sq)) {
    throw std::domain_error("elicitation: requires 0 < s1_sq < s2_sq");
  }
  if (!(spec.gamma_vc > 0.5) || !(spec.gamma_vc < 1.0)) {
    throw std::domain_error("elicitation: requires 0.5 < gamma_vc < 1");
  }
}

}  // namespace

LocationElicitation elicit_location(const ElicitationSpec& spec) {
  validate(spec);
  LocationElicitation out;
  out.mu0 = 0.5 * (spec.m1 + spec.m2);
  const double half = 0.5 * (spec.m2 - spec.m1);
  out.tau0_sq = half * half / spec.s2_sq;
  return out;
}

VarianceElicitation elicit_variance(const ElicitationSpec& spec) {
  validate(spec);
  const double g = spec.gamma_vc;
  const double p_hi = 0.5 * (1.0 + g);
  const double p_lo = 0.5 * (1.0 - g);
  const double z = std_normal_quantile(p_hi);
  const double target_hi = z * z / spec.s1_sq;
  const double target_lo = z * z / spec.s2_sq;
  const double target_ratio = spec.s2_sq / spec.s1_sq;

  // quantile ratio at rate 1; +inf when the lower quantile underflows
  auto ratio = [&](double alpha) {
    double qhi = gamma_quantile(p_hi, alpha, 1.0);
    double qlo = gamma_quantile(p_lo, alpha, 1.0);
    if (!(qlo > 0.0)) return std::numeric_limits<double>::infinity();
    return qhi / qlo;
  };

  double lo = 1e-3, hi = 1e3;
  int expansions = 0;
  while (ratio(lo) < target_ratio) {  // ratio decreasing: need smaller alpha
    lo *= 0.1;
    ++expansions;
    if (lo < 1e-8) {
      throw NumericError(
          "elicit_variance: no solution; bracket grew past alpha0 = 1e-8 after " +
          std::to_string(expansions) + " expansions (ratio target " +
          std::to_string(target_ratio) + ")");
    }
  }
  while (ratio(hi) > target_ratio) {
    hi *= 10.0;
    ++expansions;
    if (hi > 1e8) {
      throw NumericError(
          "elicit_variance: no solution; bracket grew past alpha0 = 1e8 after " +
          std::to_string(expansions) +
          " expansions (s2_sq/s1_sq too close to 1?)");
    }
  }
  double alpha = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    alpha = 0.5 * (lo + hi);
    double r = ratio(alpha);
    if (std::fabs(r - target_ratio) <= 1e-10 * target_ratio) break;
    (r > target_ratio ? lo : hi) = alpha;
  }

  VarianceElicitation out;
  out.alpha0 = alpha;
  out.beta0 = gamma_quantile(p_hi, alpha, 1.0) / target_hi;
  out.residual_upper =
      (gamma_quantile(p_hi, alpha, out.beta0) - target_hi) / target_hi;
  out.residual_lower =
      (gamma_quantile(p_lo, alpha, out.beta0) - target_lo) / target_lo;
  return out;
}

Hyperparameters elicit(const ElicitationSpec& spec) {
  LocationElicitation loc = elicit_location(spec);
  VarianceElicitation var = elicit_variance(spec);
  return Hyperparameters{loc.mu0, loc.tau0_sq, var.alpha0, var.beta0};
}

void validate(const Hyperparameters& hyper) {
  if (!std::isfinite(hyper.mu0) || !(hyper.tau0_sq > 0.0) ||
      !(hyper.alpha0 > 0.0) || !(hyper.beta0 > 0.0)) {
    throw std::domain_error(
        "hyperparameters: need finite mu0 and positive tau0_sq, alpha0, beta0");
  }
}

}  // namespace relbel
