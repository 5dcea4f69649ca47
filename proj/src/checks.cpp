// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include "relbel/checks.hpp"

#include <cmath>
#include <stdexcept>

#include "relbel/distributions.hpp"

namespace relbel {

std::string to_string(ConflictVerdict v) {
  switch (v) {
    case ConflictVerdict::variance_conflict: return "variance_conflict";
    case ConflictVerdict::means_conflict: return "means_conflict";
    case ConflictVerdict::no_conflict: return "no_conflict";
  }
  return "no_conflict";
}

double prior_predictive_v_logdensity(double v, const Hyperparameters& hyper,
                                     int k) {
  validate(hyper);
  if (!(v > 0.0)) {
    throw std::domain_error("prior_predictive_v_logdensity: v must be > 0");
  }
  if (k < 1) throw std::domain_error("prior_predictive_v_logdensity: k must be >= 1");
  const double a0 = hyper.alpha0;
  const double b2 = 2.0 * hyper.beta0;
  const double kh = 0.5 * k;
  return std::lgamma(kh + a0) - std::lgamma(a0) - std::lgamma(kh) +
         (kh - 1.0) * std::log(v / b2) - (kh + a0) * std::log1p(v / b2) -
         std::log(b2);
}

double check_variance_prior(const Hyperparameters& hyper,
                            const SufficientStats& stats, std::int64_t reps,
                            RandomStream& rng) {
  validate(hyper);
  if (reps < 1) throw std::domain_error("check_variance_prior: reps must be >= 1");
  if (!(stats.s2 > 0.0)) {
    throw std::domain_error("check_variance_prior: degenerate data, s2 must be > 0");
  }
  const int k = stats.n_e + stats.n_r - 2;
  if (k < 1) throw std::domain_error("check_variance_prior: needs n_E + n_R >= 3");
  const double v_obs = k * stats.s2;
  const double score_obs =
      prior_predictive_v_logdensity(v_obs, hyper, k) + 0.5 * std::log(v_obs);
  std::int64_t count = 0;
  for (std::int64_t r = 0; r < reps; ++r) {
    const double sigma2 = 1.0 / sample_gamma(rng, hyper.alpha0, hyper.beta0);
    const double v = sigma2 * sample_chi_squared(rng, k);
    const double score =
        prior_predictive_v_logdensity(v, hyper, k) + 0.5 * std::log(v);
    if (score <= score_obs) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(reps);
}

double check_means_prior(const Hyperparameters& hyper,
                         const SufficientStats& stats, std::int64_t reps,
                         RandomStream& rng) {
  validate(hyper);
  if (reps < 1) throw std::domain_error("check_means_prior: reps must be >= 1");
  if (stats.n_e < 1 || stats.n_r < 1) {
    throw std::domain_error("check_means_prior: invalid arm sizes");
  }
  const double df = 2.0 * hyper.alpha0;
  const std::array<double, 2> mean{hyper.mu0, hyper.mu0};
  const double d_e = hyper.tau0_sq + 1.0 / stats.n_e;
  const double d_r = hyper.tau0_sq + 1.0 / stats.n_r;
  const double rate_ratio = hyper.beta0 / hyper.alpha0;
  const std::array<double, 2> scale{rate_ratio * d_e, rate_ratio * d_r};
  const double score_obs =
      bivariate_t_logpdf({stats.xbar_e, stats.xbar_r}, df, mean, scale);
  std::int64_t count = 0;
  for (std::int64_t r = 0; r < reps; ++r) {
    const double sigma2 = 1.0 / sample_gamma(rng, hyper.alpha0, hyper.beta0);
    const double u_e = sample_normal(rng, hyper.mu0, std::sqrt(sigma2 * d_e));
    const double u_r = sample_normal(rng, hyper.mu0, std::sqrt(sigma2 * d_r));
    if (bivariate_t_logpdf({u_e, u_r}, df, mean, scale) <= score_obs) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(reps);
}

ConflictReport check_prior(const Hyperparameters& hyper,
                           const SufficientStats& stats, std::int64_t reps,
                           double threshold, std::uint64_t seed) {
  if (!(threshold > 0.0) || !(threshold < 0.5)) {
    throw std::domain_error("check_prior: requires 0 < threshold < 0.5");
  }
  ConflictReport report;
  report.threshold = threshold;
  report.reps = reps;
  report.seed = seed;
  RandomStream variance_rng(seed, 1);
  report.p_variance = check_variance_prior(hyper, stats, reps, variance_rng);
  if (report.p_variance < threshold) {
    report.verdict = ConflictVerdict::variance_conflict;
    return report;
  }
  RandomStream means_rng(seed, 2);
  report.p_means = check_means_prior(hyper, stats, reps, means_rng);
  report.verdict = *report.p_means < threshold ? ConflictVerdict::means_conflict
                                               : ConflictVerdict::no_conflict;
  return report;
}

}  // namespace relbel
