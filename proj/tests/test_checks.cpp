// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "relbel/checks.hpp"
#include "relbel/distributions.hpp"
#include "test_support.hpp"

using namespace relbel;
using test_support::adaptive_simpson;

namespace {

const Hyperparameters kElicited{0.0, 0.67, 1.0, 8.0};

SufficientStats example_stats() {
  return sufficient_stats(test_support::example_data());
}

// independent F(d1, d2) log density for the cross-representation check
double log_f_density(double x, double d1, double d2) {
  double lbeta = std::lgamma(0.5 * d1) + std::lgamma(0.5 * d2) -
                 std::lgamma(0.5 * (d1 + d2));
  return 0.5 * d1 * std::log(d1 / d2) + (0.5 * d1 - 1.0) * std::log(x) -
         0.5 * (d1 + d2) * std::log1p(d1 * x / d2) - lbeta;
}

}  // namespace

TEST_SUITE_BEGIN("checks");

TEST_CASE("m_V integrates to one") {
  // substitute u = 1/(1 + v/(2 beta0)); v = 2 beta0 (1-u)/u
  for (auto [k, a0, b0] : {std::tuple{22, 1.0, 8.0}, std::tuple{10, 2.5, 3.0}}) {
    Hyperparameters hyper{0.0, 1.0, a0, b0};
    auto integrand = [&](double u) {
      double v = 2.0 * b0 * (1.0 - u) / u;
      return std::exp(prior_predictive_v_logdensity(v, hyper, k)) * 2.0 * b0 / (u * u);
    };
    double total = adaptive_simpson(integrand, 1e-9, 1.0 - 1e-9, 1e-7);
    CHECK(std::fabs(total - 1.0) < 1e-4);
  }
}

TEST_CASE("m_V equals the scaled-F representation pointwise") {
  // V ~ (k beta0/alpha0) F(k, 2 alpha0)
  const int k = 22;
  const double c = k * kElicited.beta0 / kElicited.alpha0;
  for (double v : {1.0, 10.0, 100.0}) {
    double direct = prior_predictive_v_logdensity(v, kElicited, k);
    double via_f = log_f_density(v / c, k, 2.0 * kElicited.alpha0) - std::log(c);
    CHECK(direct == doctest::Approx(via_f).epsilon(1e-10));
  }
}

TEST_CASE("m_V closed form at k = 2, alpha0 = 1") {
  Hyperparameters hyper{0.0, 1.0, 1.0, 8.0};
  const double b2 = 2.0 * hyper.beta0;
  for (double v : {0.5, b2, 40.0}) {
    double expected = std::log(1.0 / b2) - 2.0 * std::log1p(v / b2);
    CHECK(prior_predictive_v_logdensity(v, hyper, 2) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
  // at v = 2 beta0 the density is 1/(8 beta0)
  CHECK(std::exp(prior_predictive_v_logdensity(b2, hyper, 2)) ==
        doctest::Approx(1.0 / (8.0 * hyper.beta0)).epsilon(1e-12));
  CHECK_THROWS_AS(prior_predictive_v_logdensity(0.0, hyper, 2), std::domain_error);
  CHECK_THROWS_AS(prior_predictive_v_logdensity(1.0, hyper, 0), std::domain_error);
}

TEST_CASE("variance check reproduces its fixed point on the example") {
  // converges to 0.1617 at 2x10^6 reps (reported value 0.15, tolerance 0.02)
  RandomStream rng(1234, 1);
  double p = check_variance_prior(kElicited, example_stats(), 40000, rng);
  CHECK(p == doctest::Approx(0.1617).epsilon(0.05));
  CHECK(std::fabs(p - 0.15) < 0.02 + 3.0 * std::sqrt(0.16 * 0.84 / 40000.0));

  RandomStream r1(7, 1), r2(7, 1);
  CHECK(check_variance_prior(kElicited, example_stats(), 2000, r1) ==
        check_variance_prior(kElicited, example_stats(), 2000, r2));

  SufficientStats degenerate{1.0, 1.0, 0.0, 12, 12};
  RandomStream r3(7, 1);
  CHECK_THROWS_AS(check_variance_prior(kElicited, degenerate, 1000, r3),
                  std::domain_error);
}

TEST_CASE("variance check p-values are approximately uniform under the prior") {
  const int replications = 500;
  const int reps = 2000;
  RandomStream sim(55, 0);
  std::vector<double> pvals;
  pvals.reserve(replications);
  const int k = 22;
  for (int r = 0; r < replications; ++r) {
    double sigma2 = 1.0 / sample_gamma(sim, kElicited.alpha0, kElicited.beta0);
    double v = sigma2 * sample_chi_squared(sim, k);
    SufficientStats stats{0.0, 0.0, v / k, 12, 12};
    RandomStream rng(100 + r, 1);
    pvals.push_back(check_variance_prior(kElicited, stats, reps, rng));
  }
  CHECK(test_support::ks_uniform(pvals) < 0.08);
}

TEST_CASE("the sqrt(v) weight changes rankings against the plain density") {
  // regression guard: the invariant weight must be able to flip an ordering
  const int k = 22;
  bool flipped = false;
  for (double v1 : {20.0, 40.0, 60.0, 90.0}) {
    for (double v2 : {150.0, 300.0, 600.0, 1200.0}) {
      double plain1 = prior_predictive_v_logdensity(v1, kElicited, k);
      double plain2 = prior_predictive_v_logdensity(v2, kElicited, k);
      double weighted1 = plain1 + 0.5 * std::log(v1);
      double weighted2 = plain2 + 0.5 * std::log(v2);
      if ((plain1 < plain2) != (weighted1 < weighted2)) flipped = true;
    }
  }
  CHECK(flipped);
}

TEST_CASE("means check reproduces its fixed point on the example") {
  // closed form for this construction: P = (1 + q_obs/(2 alpha0))^(-alpha0)
  SufficientStats stats = example_stats();
  const double d = kElicited.tau0_sq + 1.0 / 12.0;
  const double s = (kElicited.beta0 / kElicited.alpha0) * d;
  const double q_obs = (stats.xbar_e * stats.xbar_e + stats.xbar_r * stats.xbar_r) / s;
  const double closed = std::pow(1.0 + 0.5 * q_obs, -1.0);
  CHECK(closed == doctest::Approx(0.148).epsilon(1e-2));

  RandomStream rng(21, 2);
  const int reps = 40000;
  double p = check_means_prior(kElicited, stats, reps, rng);
  CHECK(std::fabs(p - closed) < 3.0 * std::sqrt(closed * (1.0 - closed) / reps));

  // the observed pair at the prior center maximizes the density: p = 1
  SufficientStats at_mode{kElicited.mu0, kElicited.mu0, 46.8, 12, 12};
  RandomStream rng2(21, 3);
  CHECK(check_means_prior(kElicited, at_mode, 2000, rng2) == doctest::Approx(1.0));
}

TEST_CASE("means scores rank identically under the mixture representation") {
  // score by the closed-form bivariate t vs. a quadrature of the
  // normal-mixture integrand; orderings must agree draw for draw
  SufficientStats stats = example_stats();
  const double d_e = kElicited.tau0_sq + 1.0 / stats.n_e;
  const double d_r = kElicited.tau0_sq + 1.0 / stats.n_r;
  const double ratio = kElicited.beta0 / kElicited.alpha0;
  auto closed_score = [&](double u1, double u2) {
    return bivariate_t_logpdf({u1, u2}, 2.0 * kElicited.alpha0,
                              {kElicited.mu0, kElicited.mu0},
                              {ratio * d_e, ratio * d_r});
  };
  auto mixture_score = [&](double u1, double u2) {
    // integrate the N2 x Gamma integrand over w = 1/sigma^2
    auto integrand = [&](double w) {
      double quad = (u1 * u1 / d_e + u2 * u2 / d_r) * w;
      double log_n2 = std::log(w / (2.0 * M_PI)) - 0.5 * std::log(d_e * d_r) - 0.5 * quad;
      double log_gamma = kElicited.alpha0 * std::log(kElicited.beta0) -
                         std::lgamma(kElicited.alpha0) +
                         (kElicited.alpha0 - 1.0) * std::log(w) - kElicited.beta0 * w;
      return std::exp(log_n2 + log_gamma);
    };
    return adaptive_simpson(integrand, 1e-9, 30.0, 1e-12);
  };
  RandomStream rng(77, 0);
  std::vector<std::pair<double, double>> draws;
  for (int i = 0; i < 200; ++i) {
    double sigma2 = 1.0 / sample_gamma(rng, kElicited.alpha0, kElicited.beta0);
    draws.emplace_back(sample_normal(rng, 0.0, std::sqrt(sigma2 * d_e)),
                       sample_normal(rng, 0.0, std::sqrt(sigma2 * d_r)));
  }
  std::vector<int> by_closed(draws.size()), by_mixture(draws.size());
  std::iota(by_closed.begin(), by_closed.end(), 0);
  by_mixture = by_closed;
  std::sort(by_closed.begin(), by_closed.end(), [&](int a, int b) {
    return closed_score(draws[a].first, draws[a].second) <
           closed_score(draws[b].first, draws[b].second);
  });
  std::sort(by_mixture.begin(), by_mixture.end(), [&](int a, int b) {
    return mixture_score(draws[a].first, draws[a].second) <
           mixture_score(draws[b].first, draws[b].second);
  });
  CHECK(by_closed == by_mixture);
}

TEST_CASE("sequential prior check") {
  SufficientStats stats = example_stats();
  ConflictReport report = check_prior(kElicited, stats, 40000, 0.05, 11);
  CHECK(report.p_variance == doctest::Approx(0.1617).epsilon(0.06));
  REQUIRE(report.p_means.has_value());
  CHECK(*report.p_means == doctest::Approx(0.148).epsilon(0.07));
  CHECK(report.verdict == ConflictVerdict::no_conflict);
  CHECK(to_string(report.verdict) == "no_conflict");

  // a raised threshold turns the same p_variance into a conflict and the
  // means check never runs
  ConflictReport strict = check_prior(kElicited, stats, 20000, 0.3, 11);
  CHECK(strict.verdict == ConflictVerdict::variance_conflict);
  CHECK_FALSE(strict.p_means.has_value());

  // wildly inflated variance conflicts at the default threshold
  SufficientStats inflated = stats;
  inflated.s2 = 1e6 * stats.s2;
  ConflictReport conflict = check_prior(kElicited, inflated, 20000, 0.05, 11);
  CHECK(conflict.verdict == ConflictVerdict::variance_conflict);
  CHECK_FALSE(conflict.p_means.has_value());

  CHECK_THROWS_AS(check_prior(kElicited, stats, 1000, 0.0, 1), std::domain_error);
  CHECK_THROWS_AS(check_prior(kElicited, stats, 1000, 0.6, 1), std::domain_error);

  // determinism of the full report
  ConflictReport again = check_prior(kElicited, stats, 40000, 0.05, 11);
  CHECK(again.p_variance == report.p_variance);
  CHECK(*again.p_means == *report.p_means);
}

TEST_SUITE_END();
