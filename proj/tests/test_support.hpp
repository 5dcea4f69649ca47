// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "relbel/trial_data.hpp"

namespace test_support {

// Trial data from the worked example: reduction of diastolic blood pressure
// under the experimental and reference treatments, n = 12 per arm.
inline relbel::TwoArmData example_data() {
  return relbel::TwoArmData{
      {3.3, 17.7, 6.7, 11.1, -5.8, 6.9, 5.8, 3.0, 6.0, 3.5, 18.7, 9.6},
      {10.3, 11.3, 2.0, -6.1, 6.2, 6.8, 3.7, -3.3, -3.6, -3.5, 13.7, 12.6}};
}

// Adaptive Simpson quadrature.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol, int depth = 28) {
  struct Impl {
    const std::function<double(double)>& f;
    double run(double a, double m, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
      double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      double flm = f(lm), frm = f(rm);
      double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
      }
      return run(a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
             run(m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
  };
  Impl impl{f};
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return impl.run(a, m, b, fa, fm, fb, whole, tol, depth);
}

// Integral of f over the whole line via x = tan(theta).
inline double integrate_real_line(const std::function<double(double)>& f,
                                  double tol) {
  auto g = [&](double theta) {
    double c = std::cos(theta);
    double x = std::tan(theta);
    return f(x) / (c * c);
  };
  const double half_pi = 0.5 * M_PI;
  return adaptive_simpson(g, -half_pi + 1e-12, half_pi - 1e-12, tol);
}

// High-precision standard normal cdf from the erf Maclaurin series; an
// implementation-independent oracle for quantile checks (|z| <= ~6).
inline double normal_cdf_series(double z) {
  double x = z / std::sqrt(2.0);
  double term = x;
  double sum = x;
  for (int n = 1; n < 400; ++n) {
    term *= -x * x / n;
    double add = term / (2 * n + 1);
    sum += add;
    if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
  }
  double erf = 2.0 / std::sqrt(M_PI) * sum;
  return 0.5 * (1.0 + erf);
}

inline double normal_quantile_oracle(double p) {
  double lo = -8.0, hi = 8.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (normal_cdf_series(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Kolmogorov-Smirnov distance between a sample and Uniform(0,1).
inline double ks_uniform(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (size_t i = 0; i < sample.size(); ++i) {
    double hi = (i + 1) / n - sample[i];
    double lo = sample[i] - i / n;
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

}  // namespace test_support
