// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "relbel/relative_belief.hpp"

namespace relbel {

struct BiasSpec {
  Hyperparameters hyper;
  int n_e = 0;
  int n_r = 0;
  double delta = 0.0;
  int alternative_bin = 1;  // nonzero; the practically different bin for bias-for
  std::int64_t reps = 100000;
  std::uint64_t seed = 1;
  LawMode mode = LawMode::paper_literal;
};

struct BiasEstimate {
  double p = 0.0;
  double se = 0.0;  // sqrt(p (1-p) / effective reps)
  std::int64_t reps = 0;
  std::int64_t discarded = 0;  // reps lost to numeric failures (< 0.1% or hard fail)
};

struct BiasReport {
  BiasEstimate against;
  BiasEstimate in_favor;
  int n_e = 0;
  int n_r = 0;
  double delta = 0.0;
  int alternative_bin = 1;
  std::int64_t reps = 0;
  std::uint64_t seed = 1;
  LawMode mode = LawMode::paper_literal;
};

// RB(0) from the reduced statistics (xbar_E - xbar_R, s^2).  The difference
// is split as stats (diff_bar, 0); the split is immaterial in paper_literal
// mode and, in derived mode, whenever n_E = n_R or mu0 = 0.
double rb_zero_from_stats(const Hyperparameters& hyper, double diff_bar,
                          double s2, int n_e, int n_r, double delta,
                          LawMode mode);

// Conditional predictive of the reduced statistics given the true mean
// difference and sigma^2: diff_bar ~ N(true_diff, (1/n_E + 1/n_R) sigma^2)
// and (n_E+n_R-2) s^2 / sigma^2 ~ chi-squared(n_E+n_R-2), independent.
std::pair<double, double> sample_cond_prior_predictive(double true_diff,
                                                       double sigma2, int n_e,
                                                       int n_r,
                                                       RandomStream& rng);

// Prior probability of observing evidence against psi = 0 when it is true:
// per rep draw 1/sigma^2 ~ Gamma(alpha0, beta0), the difference from
// N(0, 2 tau0^2 sigma^2) truncated to (-delta, delta], the reduced
// statistics, and count rb < 1 (rb == 1 counts as neither).
BiasEstimate simulate_bias_against(const BiasSpec& spec);

// Prior probability of evidence in favor of psi = 0 when the alternative bin
// holds: truncation to ((2i-1) delta, (2i+1) delta], count rb > 1.
BiasEstimate simulate_bias_for(const BiasSpec& spec);

struct DesignRow {
  int n_e = 0;
  int n_r = 0;
  BiasEstimate against;
  BiasEstimate in_favor;
};

// One row per sample-size pair; every row reuses the same seed (common
// random numbers), so a single-entry scan equals the direct simulate_* calls.
std::vector<DesignRow> design_scan(const Hyperparameters& hyper, double delta,
                                   const std::vector<std::pair<int, int>>& n_list,
                                   std::int64_t reps, std::uint64_t seed,
                                   LawMode mode = LawMode::paper_literal,
                                   int alternative_bin = 1);

}  // namespace relbel
