// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0

// Shapiro-Wilk W statistic and p-value for complete samples, following
// AS R94 (Royston, Applied Statistics 44(4), 1995), which corrects AS 181
// for n > 50.  Coefficient polynomials are Royston's; quantiles come from
// this library's normal inverse instead of AS 111.
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "relbel/distributions.hpp"
#include "relbel/trial_data.hpp"

namespace relbel {

namespace {

// Ascending-order polynomial evaluation.
double poly(const double* c, int n, double x) {
  double p = c[n - 1];
  for (int i = n - 2; i >= 0; --i) p = p * x + c[i];
  return p;
}

const double kC1[6] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
const double kC2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
const double kC3[4] = {0.5440, -0.39978, 0.025054, -6.714e-4};
const double kC4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
const double kC5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
const double kC6[3] = {-0.4803, -0.082676, 0.0030302};

}  // namespace

ShapiroWilkResult shapiro_wilk(std::span<const double> values) {
  const int n = static_cast<int>(values.size());
  if (n < 3 || n > 5000) {
    throw std::domain_error("shapiro_wilk: sample size must satisfy 3 <= n <= 5000");
  }
  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());
  if (!(x[n - 1] - x[0] > 0.0)) {
    throw std::domain_error("shapiro_wilk: sample has zero range");
  }

  // Normalized coefficients a (antisymmetric, sum of squares 1).
  std::vector<double> a(n, 0.0);
  if (n == 3) {
    a[0] = -std::sqrt(0.5);
    a[2] = std::sqrt(0.5);
  } else {
    std::vector<double> m(n);
    double ssq = 0.0;
    for (int i = 0; i < n; ++i) {
      m[i] = std_normal_quantile((i + 1 - 0.375) / (n + 0.25));
      ssq += m[i] * m[i];
    }
    const double rsn = 1.0 / std::sqrt(static_cast<double>(n));
    const double an = poly(kC1, 6, rsn) + m[n - 1] / std::sqrt(ssq);
    int first_mid;
    double phi;
    if (n > 5) {
      const double an1 = poly(kC2, 6, rsn) + m[n - 2] / std::sqrt(ssq);
      phi = (ssq - 2.0 * m[n - 1] * m[n - 1] - 2.0 * m[n - 2] * m[n - 2]) /
            (1.0 - 2.0 * an * an - 2.0 * an1 * an1);
      a[n - 1] = an;
      a[n - 2] = an1;
      a[0] = -an;
      a[1] = -an1;
      first_mid = 2;
    } else {
      phi = (ssq - 2.0 * m[n - 1] * m[n - 1]) / (1.0 - 2.0 * an * an);
      a[n - 1] = an;
      a[0] = -an;
      first_mid = 1;
    }
    const double sphi = std::sqrt(phi);
    for (int i = first_mid; i < n - first_mid; ++i) a[i] = m[i] / sphi;
  }

  // W as the squared correlation between coefficients and order statistics;
  // 1 - W in product form to keep accuracy when W is near 1.
  double xbar = 0.0;
  for (double v : x) xbar += v;
  xbar /= n;
  double ssx = 0.0, ssa = 0.0, sax = 0.0;
  for (int i = 0; i < n; ++i) {
    ssx += (x[i] - xbar) * (x[i] - xbar);
    ssa += a[i] * a[i];
    sax += a[i] * (x[i] - xbar);
  }
  const double ssassx = std::sqrt(ssa * ssx);
  const double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
  ShapiroWilkResult result;
  result.w = 1.0 - w1;

  if (n == 3) {
    // exact null distribution
    const double pi6 = 6.0 / M_PI;
    const double stqr = std::asin(std::sqrt(0.75));
    double p = pi6 * (std::asin(std::sqrt(result.w)) - stqr);
    result.p_value = std::clamp(p, 0.0, 1.0);
    return result;
  }

  const double an = static_cast<double>(n);
  double y = std::log(w1);
  double mu, sigma;
  if (n <= 11) {
    const double g = -2.273 + 0.459 * an;
    if (y >= g) {
      result.p_value = 1e-99;
      return result;
    }
    y = -std::log(g - y);
    mu = poly(kC3, 4, an);
    sigma = std::exp(poly(kC4, 4, an));
  } else {
    const double ln_n = std::log(an);
    mu = poly(kC5, 4, ln_n);
    sigma = std::exp(poly(kC6, 3, ln_n));
  }
  result.p_value = std_normal_cdf(-(y - mu) / sigma);
  return result;
}

}  // namespace relbel
