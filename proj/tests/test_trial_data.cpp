// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "relbel/distributions.hpp"
#include "relbel/trial_data.hpp"
#include "test_support.hpp"

using namespace relbel;

TEST_SUITE_BEGIN("trial_data");

TEST_CASE("sufficient statistics of the example data") {
  SufficientStats st = sufficient_stats(test_support::example_data());
  CHECK(st.n_e == 12);
  CHECK(st.n_r == 12);
  CHECK(st.xbar_e == doctest::Approx(7.21).epsilon(1e-3));
  CHECK(st.xbar_r == doctest::Approx(4.175).epsilon(1e-12));
  CHECK(st.s2 == doctest::Approx(46.7950757575758).epsilon(1e-12));
}

TEST_CASE("sufficient statistics edge cases") {
  TwoArmData constant{{2.0, 2.0, 2.0}, {5.0, 5.0}};
  CHECK(sufficient_stats(constant).s2 == 0.0);

  TwoArmData data = test_support::example_data();
  TwoArmData swapped{data.reference, data.experimental};
  SufficientStats a = sufficient_stats(data), b = sufficient_stats(swapped);
  CHECK(a.xbar_e == b.xbar_r);
  CHECK(a.xbar_r == b.xbar_e);
  CHECK(a.s2 == doctest::Approx(b.s2).epsilon(1e-15));

  // invariant under within-arm permutation
  TwoArmData shuffled = data;
  std::mt19937 gen(1);
  std::shuffle(shuffled.experimental.begin(), shuffled.experimental.end(), gen);
  std::shuffle(shuffled.reference.begin(), shuffled.reference.end(), gen);
  SufficientStats c = sufficient_stats(shuffled);
  CHECK(c.xbar_e == doctest::Approx(a.xbar_e).epsilon(1e-15));
  CHECK(c.s2 == doctest::Approx(a.s2).epsilon(1e-14));

  CHECK_THROWS_AS(sufficient_stats(TwoArmData{{1.0}, {1.0, 2.0}}), std::domain_error);
  CHECK_THROWS_AS(sufficient_stats(TwoArmData{{1.0, NAN}, {1.0, 2.0}}), std::domain_error);
}

TEST_CASE("residuals") {
  TwoArmData data = test_support::example_data();
  std::vector<double> res = residuals(data);
  CHECK(res.size() == 24);
  double sum_e = std::accumulate(res.begin(), res.begin() + 12, 0.0);
  double sum_r = std::accumulate(res.begin() + 12, res.end(), 0.0);
  CHECK(std::fabs(sum_e) < 1e-12);
  CHECK(std::fabs(sum_r) < 1e-12);

  TwoArmData shifted = data;
  for (double& v : shifted.experimental) v += 17.0;
  std::vector<double> res2 = residuals(shifted);
  for (size_t i = 0; i < res.size(); ++i) {
    CHECK(res2[i] == doctest::Approx(res[i]).epsilon(1e-12));
  }
}

TEST_CASE("shapiro-wilk against the published AS R94 driver values") {
  // complete-sample example shipped with the original algorithm: n = 25,
  // W = 0.83467, p = 0.000914
  std::vector<double> x{0.139, 0.157, 0.175, 0.256, 0.344, 0.413, 0.503,
                        0.577, 0.614, 0.655, 0.954, 1.392, 1.557, 1.648,
                        1.690, 1.994, 2.174, 2.206, 3.245, 3.510, 3.571,
                        4.354, 4.980, 6.084, 8.351};
  ShapiroWilkResult r = shapiro_wilk(x);
  CHECK(r.w == doctest::Approx(0.83467).epsilon(1e-3));
  CHECK(r.p_value == doctest::Approx(0.000914).epsilon(0.05));
}

TEST_CASE("shapiro-wilk on the example trial") {
  TwoArmData data = test_support::example_data();
  // pooled raw sample reproduces the reported model-check p-value of 0.51
  std::vector<double> pooled = data.experimental;
  pooled.insert(pooled.end(), data.reference.begin(), data.reference.end());
  ShapiroWilkResult raw = shapiro_wilk(pooled);
  CHECK(raw.p_value == doctest::Approx(0.51).epsilon(0.04));
  CHECK(raw.w == doctest::Approx(0.963231).epsilon(1e-4));
  // per-arm centered residuals remove the mean gap and score higher
  ShapiroWilkResult res = shapiro_wilk(residuals(data));
  CHECK(res.p_value == doctest::Approx(0.801920).epsilon(1e-3));
  CHECK(res.w == doctest::Approx(0.975547).epsilon(1e-4));
}

TEST_CASE("shapiro-wilk domain errors") {
  CHECK_THROWS_AS(shapiro_wilk(std::vector<double>{1.0, 2.0}), std::domain_error);
  CHECK_THROWS_AS(shapiro_wilk(std::vector<double>{3.0, 3.0, 3.0, 3.0}),
                  std::domain_error);
  std::vector<double> big(5001, 0.0);
  for (size_t i = 0; i < big.size(); ++i) big[i] = static_cast<double>(i);
  CHECK_THROWS_AS(shapiro_wilk(big), std::domain_error);
}

TEST_CASE("shapiro-wilk small-sample branches") {
  ShapiroWilkResult r3 = shapiro_wilk(std::vector<double>{1.0, 2.0, 4.0});
  CHECK(r3.w > 0.75);
  CHECK(r3.p_value >= 0.0);
  CHECK(r3.p_value <= 1.0);
  ShapiroWilkResult r8 =
      shapiro_wilk(std::vector<double>{-1.2, 0.3, 0.5, 0.9, 1.4, 2.0, 2.2, 3.1});
  CHECK(r8.p_value > 0.0);
  CHECK(r8.p_value < 1.0);
}

TEST_CASE("shapiro-wilk null p-values are approximately uniform") {
  RandomStream rng(314, 0);
  const int reps = 10000;
  int below = 0;
  std::vector<double> sample(24);
  for (int r = 0; r < reps; ++r) {
    for (double& v : sample) v = sample_normal(rng, 0.0, 1.0);
    if (shapiro_wilk(sample).p_value < 0.05) ++below;
  }
  double frac = static_cast<double>(below) / reps;
  CHECK(frac > 0.035);
  CHECK(frac < 0.065);
}

TEST_CASE("qq points") {
  std::vector<double> v{3.0, -1.0, 2.0, 0.5};
  std::vector<QQPoint> pts = qq_points(v);
  REQUIRE(pts.size() == 4);
  for (size_t i = 1; i < pts.size(); ++i) {
    CHECK(pts[i].sample >= pts[i - 1].sample);
    CHECK(pts[i].theoretical > pts[i - 1].theoretical);
  }
  std::vector<QQPoint> two = qq_points(std::vector<double>{1.0, 5.0});
  CHECK(two[0].theoretical == doctest::Approx(-two[1].theoretical).epsilon(1e-12));
  CHECK_THROWS_AS(qq_points(std::vector<double>{1.0}), std::domain_error);
}

TEST_CASE("qq slope is one for a large normal sample") {
  RandomStream rng(7, 1);
  std::vector<double> sample(10000);
  for (double& v : sample) v = sample_normal(rng, 0.0, 1.0);
  std::vector<QQPoint> pts = qq_points(sample);
  double sxx = 0.0, sxy = 0.0, sx = 0.0, sy = 0.0;
  for (const QQPoint& p : pts) {
    sx += p.theoretical;
    sy += p.sample;
    sxx += p.theoretical * p.theoretical;
    sxy += p.theoretical * p.sample;
  }
  const double n = static_cast<double>(pts.size());
  double slope = (sxy - sx * sy / n) / (sxx - sx * sx / n);
  CHECK(slope == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("two-arm csv parsing") {
  std::istringstream good("arm,value\nE,1.5\nR,2.5\nE,-0.5\nR,3.5\n");
  TwoArmData data = read_two_arm_csv(good);
  CHECK(data.experimental == std::vector<double>{1.5, -0.5});
  CHECK(data.reference == std::vector<double>{2.5, 3.5});

  std::istringstream crlf("arm,value\r\nE,1.5\r\nR,2.5\r\n");
  TwoArmData d2 = read_two_arm_csv(crlf);
  CHECK(d2.experimental.size() == 1);

  std::istringstream bad_header("treatment,value\nE,1\n");
  CHECK_THROWS(read_two_arm_csv(bad_header));
  std::istringstream bad_arm("arm,value\nX,1\n");
  CHECK_THROWS(read_two_arm_csv(bad_arm));
  std::istringstream bad_value("arm,value\nE,abc\n");
  CHECK_THROWS(read_two_arm_csv(bad_value));

  TwoArmData file = read_two_arm_csv_file(RELBEL_EXAMPLE_CSV);
  SufficientStats st = sufficient_stats(file);
  CHECK(st.xbar_e == doctest::Approx(7.2083333333).epsilon(1e-9));
  CHECK_THROWS(read_two_arm_csv_file("/nonexistent/file.csv"));
}

TEST_SUITE_END();
