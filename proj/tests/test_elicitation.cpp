// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "relbel/distributions.hpp"
#include "relbel/elicitation.hpp"

using namespace relbel;

TEST_SUITE_BEGIN("elicitation");

TEST_CASE("location elicitation for the two example priors") {
  LocationElicitation diffuse = elicit_location({-100.0, 100.0, 5.0, 1000.0});
  CHECK(diffuse.mu0 == 0.0);
  CHECK(diffuse.tau0_sq == 10.0);

  LocationElicitation tight = elicit_location({-20.0, 20.0, 10.0, 600.0});
  CHECK(tight.mu0 == 0.0);
  CHECK(tight.tau0_sq == doctest::Approx(0.667).epsilon(5e-4));

  LocationElicitation sym = elicit_location({-3.5, 3.5, 1.0, 4.0});
  CHECK(sym.mu0 == 0.0);
}

TEST_CASE("variance elicitation satisfies both quantile equations") {
  for (const ElicitationSpec& spec :
       {ElicitationSpec{-100.0, 100.0, 5.0, 1000.0},
        ElicitationSpec{-20.0, 20.0, 10.0, 600.0},
        ElicitationSpec{-5.0, 9.0, 0.4, 7.0},
        ElicitationSpec{0.0, 1.0, 2.0, 2.4, 0.99}}) {
    VarianceElicitation v = elicit_variance(spec);
    CHECK(std::fabs(v.residual_upper) < 1e-8);
    CHECK(std::fabs(v.residual_lower) < 1e-8);
    // cdf at the solved quantile points returns (1 +/- gamma)/2
    const double z = std_normal_quantile(0.5 * (1.0 + spec.gamma_vc));
    CHECK(gamma_cdf(z * z / spec.s1_sq, v.alpha0, v.beta0) ==
          doctest::Approx(0.5 * (1.0 + spec.gamma_vc)).epsilon(1e-7));
    CHECK(gamma_cdf(z * z / spec.s2_sq, v.alpha0, v.beta0) ==
          doctest::Approx(0.5 * (1.0 - spec.gamma_vc)).epsilon(1e-7));
  }
}

TEST_CASE("variance elicitation matches an independent solver") {
  // solutions computed with an independent quantile-ratio bisection
  VarianceElicitation first = elicit_variance({-100.0, 100.0, 5.0, 1000.0});
  CHECK(first.alpha0 == doctest::Approx(2.2515071).epsilon(1e-5));
  CHECK(first.beta0 == doctest::Approx(4.8657899).epsilon(1e-5));
  // rounded report is order-of-magnitude only
  CHECK(first.alpha0 > 1.0);
  CHECK(first.alpha0 < 5.0);
  CHECK(first.beta0 > 2.0);
  CHECK(first.beta0 < 10.0);

  VarianceElicitation second = elicit_variance({-20.0, 20.0, 10.0, 600.0});
  CHECK(second.alpha0 == doctest::Approx(3.3479816).epsilon(1e-5));
  CHECK(second.beta0 == doctest::Approx(11.7492113).epsilon(1e-5));
}

TEST_CASE("variance elicitation errors") {
  // bounds ratio near one forces alpha0 upward until the documented cap
  CHECK_THROWS_AS(elicit_variance({-1.0, 1.0, 10.0, 10.0 * 1.0001}), NumericError);
  // equal bounds violate the spec invariants
  CHECK_THROWS_AS(elicit_variance({-1.0, 1.0, 10.0, 10.0}), std::domain_error);
  CHECK_THROWS_AS(elicit_variance({1.0, -1.0, 1.0, 2.0}), std::domain_error);
  CHECK_THROWS_AS(elicit_variance({-1.0, 1.0, 1.0, 2.0, 0.4}), std::domain_error);
  // a mildly tight ratio still solves
  VarianceElicitation tight = elicit_variance({-1.0, 1.0, 10.0, 10.5});
  CHECK(std::fabs(tight.residual_upper) < 1e-8);
  CHECK(tight.alpha0 > 1e3);
}

TEST_CASE("elicit composes location and variance") {
  ElicitationSpec spec{-100.0, 100.0, 5.0, 1000.0};
  Hyperparameters h = elicit(spec);
  CHECK(h.mu0 == 0.0);
  CHECK(h.tau0_sq == 10.0);
  CHECK(h.alpha0 == doctest::Approx(2.2515071).epsilon(1e-5));

  // a different certainty level moves only the variance pair
  ElicitationSpec spec99 = spec;
  spec99.gamma_vc = 0.99;
  Hyperparameters h99 = elicit(spec99);
  CHECK(h99.mu0 == h.mu0);
  CHECK(h99.tau0_sq == h.tau0_sq);
  CHECK(h99.alpha0 != doctest::Approx(h.alpha0).epsilon(1e-3));
}

TEST_CASE("elicitation equivariance") {
  ElicitationSpec base{-6.0, 10.0, 3.0, 50.0};
  Hyperparameters h = elicit(base);

  // shift: mu0 moves by c, everything else fixed
  ElicitationSpec shifted = base;
  shifted.m1 += 4.5;
  shifted.m2 += 4.5;
  Hyperparameters hs = elicit(shifted);
  CHECK(hs.mu0 == doctest::Approx(h.mu0 + 4.5).epsilon(1e-12));
  CHECK(hs.tau0_sq == doctest::Approx(h.tau0_sq).epsilon(1e-12));
  CHECK(hs.alpha0 == doctest::Approx(h.alpha0).epsilon(1e-10));
  CHECK(hs.beta0 == doctest::Approx(h.beta0).epsilon(1e-10));

  // scale by c > 0: mu0 scales, tau0_sq fixed, alpha0 fixed, beta0 scales c^2
  const double c = 2.5;
  ElicitationSpec scaled{base.m1 * c, base.m2 * c, base.s1_sq * c * c,
                         base.s2_sq * c * c};
  Hyperparameters hc = elicit(scaled);
  CHECK(hc.mu0 == doctest::Approx(h.mu0 * c).epsilon(1e-12));
  CHECK(hc.tau0_sq == doctest::Approx(h.tau0_sq).epsilon(1e-12));
  CHECK(hc.alpha0 == doctest::Approx(h.alpha0).epsilon(1e-8));
  CHECK(hc.beta0 == doctest::Approx(h.beta0 * c * c).epsilon(1e-8));
}

TEST_SUITE_END();
