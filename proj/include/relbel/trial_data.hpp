// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace relbel {

// Raw responses of a two-arm trial; both arms in the same units.
struct TwoArmData {
  std::vector<double> experimental;
  std::vector<double> reference;
};

// Minimal sufficient statistic of the equal-variance two-arm normal model:
// per-arm means and the pooled variance.
struct SufficientStats {
  double xbar_e = 0.0;
  double xbar_r = 0.0;
  double s2 = 0.0;  // pooled: [(n_e-1)s_e^2 + (n_r-1)s_r^2] / (n_e + n_r - 2)
  int n_e = 0;
  int n_r = 0;
};

// Requires at least two finite observations per arm.
SufficientStats sufficient_stats(const TwoArmData& data);

// Per-arm centered residuals: x_{E,i} - xbar_E followed by x_{R,i} - xbar_R.
std::vector<double> residuals(const TwoArmData& data);

struct ShapiroWilkResult {
  double w = 0.0;
  double p_value = 0.0;
};

// Shapiro-Wilk W test for normality, complete samples, 3 <= n <= 5000.
// AS R94 (Royston 1995) coefficients and p-value approximation.
ShapiroWilkResult shapiro_wilk(std::span<const double> values);

struct QQPoint {
  double theoretical = 0.0;  // standard-normal quantile at (i - 3/8)/(n + 1/4)
  double sample = 0.0;       // order statistic
};

std::vector<QQPoint> qq_points(std::span<const double> values);

// CSV with header "arm,value"; arm is E or R; rows in any order.
TwoArmData read_two_arm_csv(std::istream& in);
TwoArmData read_two_arm_csv_file(const std::string& path);

}  // namespace relbel
