// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "relbel/elicitation.hpp"
#include "relbel/random.hpp"
#include "relbel/trial_data.hpp"

namespace relbel {

enum class ConflictVerdict { variance_conflict, means_conflict, no_conflict };

std::string to_string(ConflictVerdict v);

struct ConflictReport {
  double p_variance = 0.0;
  std::optional<double> p_means;  // absent iff the variance check already failed
  double threshold = 0.05;
  ConflictVerdict verdict = ConflictVerdict::no_conflict;
  std::int64_t reps = 0;
  std::uint64_t seed = 1;
};

// Log prior-predictive density of V = (n_E+n_R-2) s^2 for k = n_E+n_R-2:
// log m_V(v) = lgamma((k+2a0)/2) - lgamma(a0) - lgamma(k/2)
//            + (k/2-1) log(v/2b0) - (k/2+a0) log(1+v/2b0) - log(2b0).
double prior_predictive_v_logdensity(double v, const Hyperparameters& hyper,
                                     int k);

// Invariant prior-predictive p-value for the sigma^2 prior: score
// log m_V(v) + log(v)/2, simulate v = sigma^2 chi2_k with 1/sigma^2 ~
// Gamma(alpha0, beta0), return the fraction scoring at or below the data.
double check_variance_prior(const Hyperparameters& hyper,
                            const SufficientStats& stats, std::int64_t reps,
                            RandomStream& rng);

// Prior-predictive p-value for the (mu_E, mu_R) prior: U = (xbar_E, xbar_R)
// scored by the bivariate t density with df 2 alpha0, mean (mu0, mu0) and
// scale (beta0/alpha0) diag(tau0^2 + 1/n_E, tau0^2 + 1/n_R).
double check_means_prior(const Hyperparameters& hyper,
                         const SufficientStats& stats, std::int64_t reps,
                         RandomStream& rng);

// Sequential protocol: variance check first; the means check runs only when
// the variance check passes the threshold.
ConflictReport check_prior(const Hyperparameters& hyper,
                           const SufficientStats& stats, std::int64_t reps,
                           double threshold, std::uint64_t seed);

}  // namespace relbel
