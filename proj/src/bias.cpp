// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include "relbel/bias.hpp"

#include <cmath>
#include <stdexcept>

namespace relbel {

namespace {

constexpr std::int64_t kChunk = 65536;
constexpr std::uint64_t kAgainstStreams = 0;
constexpr std::uint64_t kForStreams = std::uint64_t{1} << 32;

void validate(const BiasSpec& spec) {
  validate(spec.hyper);
  if (spec.n_e < 1 || spec.n_r < 1 || spec.n_e + spec.n_r < 3) {
    throw std::domain_error("bias: arm sizes too small");
  }
  if (!(spec.delta > 0.0)) throw std::domain_error("bias: delta must be > 0");
  if (spec.alternative_bin == 0) {
    throw std::domain_error("bias: alternative_bin must be nonzero");
  }
  if (spec.reps < 1) throw std::domain_error("bias: reps must be >= 1");
}

BiasEstimate run_simulation(const BiasSpec& spec, bool against) {
  validate(spec);
  const double lo = against ? -spec.delta
                            : (2 * spec.alternative_bin - 1) * spec.delta;
  const double hi = against ? spec.delta
                            : (2 * spec.alternative_bin + 1) * spec.delta;
  const std::uint64_t stream_base = against ? kAgainstStreams : kForStreams;

  std::int64_t hits = 0;
  std::int64_t discarded = 0;
  std::int64_t done = 0;
  for (std::uint64_t chunk = 0; done < spec.reps; ++chunk) {
    RandomStream rng(spec.seed, stream_base + chunk);
    const std::int64_t todo = std::min(kChunk, spec.reps - done);
    for (std::int64_t r = 0; r < todo; ++r) {
      try {
        const double sigma2 =
            1.0 / sample_gamma(rng, spec.hyper.alpha0, spec.hyper.beta0);
        const double true_diff = sample_truncated_normal(
            rng, 0.0, std::sqrt(2.0 * spec.hyper.tau0_sq * sigma2), lo, hi);
        auto [diff_bar, s2] = sample_cond_prior_predictive(
            true_diff, sigma2, spec.n_e, spec.n_r, rng);
        const double rb = rb_zero_from_stats(spec.hyper, diff_bar, s2, spec.n_e,
                                             spec.n_r, spec.delta, spec.mode);
        if (against ? rb < 1.0 : rb > 1.0) ++hits;
      } catch (const NumericError&) {
        ++discarded;
      }
    }
    done += todo;
  }
  if (discarded * 1000 >= spec.reps) {
    throw NumericError("bias simulation: more than 0.1% of reps failed numerically");
  }
  BiasEstimate est;
  est.reps = spec.reps;
  est.discarded = discarded;
  const double effective = static_cast<double>(spec.reps - discarded);
  est.p = static_cast<double>(hits) / effective;
  est.se = std::sqrt(est.p * (1.0 - est.p) / effective);
  return est;
}

}  // namespace

double rb_zero_from_stats(const Hyperparameters& hyper, double diff_bar,
                          double s2, int n_e, int n_r, double delta,
                          LawMode mode) {
  if (!(s2 >= 0.0)) throw std::domain_error("rb_zero_from_stats: s2 must be >= 0");
  if (!(delta > 0.0)) throw std::domain_error("rb_zero_from_stats: delta must be > 0");
  SufficientStats stats{diff_bar, 0.0, s2, n_e, n_r};
  const DifferenceLaws laws = difference_laws(hyper, stats, mode);
  const double prior_mass = scaled_t_interval_prob(laws.prior, -delta, delta);
  if (prior_mass < 1e-12) {
    throw NumericError("rb_zero_from_stats: prior interval mass below stability floor");
  }
  return scaled_t_interval_prob(laws.posterior, -delta, delta) / prior_mass;
}

std::pair<double, double> sample_cond_prior_predictive(double true_diff,
                                                       double sigma2, int n_e,
                                                       int n_r,
                                                       RandomStream& rng) {
  if (!(sigma2 > 0.0)) {
    throw std::domain_error("sample_cond_prior_predictive: sigma2 must be > 0");
  }
  if (n_e < 1 || n_r < 1 || n_e + n_r < 3) {
    throw std::domain_error("sample_cond_prior_predictive: arm sizes too small");
  }
  const double diff_bar = sample_normal(
      rng, true_diff, std::sqrt((1.0 / n_e + 1.0 / n_r) * sigma2));
  const double k = n_e + n_r - 2;
  const double s2 = sigma2 * sample_chi_squared(rng, k) / k;
  return {diff_bar, s2};
}

BiasEstimate simulate_bias_against(const BiasSpec& spec) {
  return run_simulation(spec, true);
}

BiasEstimate simulate_bias_for(const BiasSpec& spec) {
  return run_simulation(spec, false);
}

std::vector<DesignRow> design_scan(const Hyperparameters& hyper, double delta,
                                   const std::vector<std::pair<int, int>>& n_list,
                                   std::int64_t reps, std::uint64_t seed,
                                   LawMode mode, int alternative_bin) {
  if (n_list.empty()) throw std::domain_error("design_scan: empty sample-size list");
  std::vector<DesignRow> rows;
  rows.reserve(n_list.size());
  for (const auto& [n_e, n_r] : n_list) {
    BiasSpec spec{hyper, n_e, n_r, delta, alternative_bin, reps, seed, mode};
    DesignRow row;
    row.n_e = n_e;
    row.n_r = n_r;
    row.against = simulate_bias_against(spec);
    row.in_favor = simulate_bias_for(spec);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace relbel
