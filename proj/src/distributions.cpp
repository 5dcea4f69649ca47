// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include "relbel/distributions.hpp"

#include <cmath>
#include <limits>

namespace relbel {

namespace {

constexpr double kEps = 1e-15;
constexpr double kFpMin = 1e-300;
constexpr int kMaxIter = 2000;
constexpr double kInf = std::numeric_limits<double>::infinity();

// P(a,x) by its power series, valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) {
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw NumericError("regularized_gamma_p: series did not converge");
}

// Q(a,x) by modified Lentz continued fraction, valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) {
      return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
  }
  throw NumericError("regularized_gamma_p: continued fraction did not converge");
}

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h;
  }
  throw NumericError("regularized_beta: continued fraction did not converge");
}

// Acklam's rational approximation to the normal quantile; |error| < 1.2e-9,
// refined below by Halley steps against the erfc-based cdf.
double norm_quantile_estimate(double p) {
  static const double A[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double B[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double C[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double D[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    double q = std::sqrt(-2.0 * std::log(p));
    return (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
           ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
           ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
  }
  double q = p - 0.5;
  double r = q * q;
  return (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q /
         (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0);
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("regularized_gamma_p: shape must be > 0");
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double regularized_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("regularized_beta: a, b must be > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                        b * std::log1p(-x) + a * std::log(x)) *
                   beta_cf(b, a, 1.0 - x) / b;
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double std_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

double std_normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("std_normal_quantile: p must lie strictly in (0,1)");
  }
  // Work in the lower tail, where Phi(x) - p subtracts without cancellation;
  // 1 - p is exact for p >= 0.5.
  if (p > 0.5) return -std_normal_quantile(1.0 - p);
  double x = norm_quantile_estimate(p);
  // Two Halley steps; f'' = -x f' collapses the correction to a rational form.
  for (int k = 0; k < 2; ++k) {
    double pdf = std_normal_pdf(x);
    if (pdf <= 0.0) break;  // beyond double tails: keep the estimate
    double u = (std_normal_cdf(x) - p) / pdf;
    x -= 2.0 * u / (2.0 + x * u);
  }
  return x;
}

double student_t_cdf(double x, double df) {
  if (!(df > 0.0)) throw std::domain_error("student_t_cdf: df must be > 0");
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  double tail = 0.5 * regularized_beta(0.5 * df, 0.5, df / (df + x * x));
  return x <= 0.0 ? tail : 1.0 - tail;
}

double student_t_pdf(double x, double df) {
  if (!(df > 0.0)) throw std::domain_error("student_t_pdf: df must be > 0");
  double lognorm = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                   0.5 * std::log(df * M_PI);
  return std::exp(lognorm - 0.5 * (df + 1.0) * std::log1p(x * x / df));
}

double student_t_quantile(double p, double df) {
  if (!(df > 0.0)) throw std::domain_error("student_t_quantile: df must be > 0");
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("student_t_quantile: p must lie strictly in (0,1)");
  }
  if (p < 0.5) return -student_t_quantile(1.0 - p, df);
  if (p == 0.5) return 0.0;
  // Bracket the upper-tail root, then bisect with a Newton polish.
  double lo = 0.0, hi = 1.0;
  int guard = 0;
  while (student_t_cdf(hi, df) < p) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 4000) throw NumericError("student_t_quantile: bracket growth failed");
  }
  for (int i = 0; i < 200 && (hi - lo) > 1e-14 * std::max(1.0, lo); ++i) {
    double mid = 0.5 * (lo + hi);
    (student_t_cdf(mid, df) < p ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int k = 0; k < 2; ++k) {
    double pdf = student_t_pdf(x, df);
    if (pdf <= 0.0) break;
    x -= (student_t_cdf(x, df) - p) / pdf;
  }
  return x;
}

double gamma_cdf(double x, double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    throw std::domain_error("gamma_cdf: shape and rate must be > 0");
  }
  if (x <= 0.0) return 0.0;
  return regularized_gamma_p(shape, rate * x);
}

double gamma_quantile(double p, double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    throw std::domain_error("gamma_quantile: shape and rate must be > 0");
  }
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("gamma_quantile: p must lie strictly in (0,1)");
  }
  const double a = shape;
  const double gln = std::lgamma(a);
  // Initial guess: Wilson-Hilferty above shape 1, small-shape expansion below.
  double x;
  if (a > 1.0) {
    double z = std_normal_quantile(p);
    double t = 1.0 - 1.0 / (9.0 * a) + z / (3.0 * std::sqrt(a));
    x = a * t * t * t;
    if (!(x > 0.0)) x = 1e-3 * a;
  } else {
    double t = 1.0 - a * (0.253 + a * 0.12);
    x = (p < t) ? std::pow(p / t, 1.0 / a) : 1.0 - std::log1p(-(p - t) / (1.0 - t));
  }
  if (x <= 0.0 || !std::isfinite(x)) return 0.0;  // quantile underflowed
  // Safeguarded Newton on P(a, x) - p with a maintained bracket.
  double lo = 0.0, hi = kInf;
  for (int it = 0; it < 200; ++it) {
    double err = regularized_gamma_p(a, x) - p;
    if (err > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    double dpdx = std::exp(-x + (a - 1.0) * std::log(x) - gln);
    double step;
    if (dpdx > 0.0 && std::isfinite(dpdx)) {
      step = err / dpdx;
    } else {
      step = std::isinf(hi) ? -x : -(0.5 * (lo + hi) - x);
    }
    double xn = x - step;
    if (!(xn > lo) || !(xn < hi)) {
      xn = std::isinf(hi) ? 2.0 * x : 0.5 * (lo + hi);
    }
    if (std::fabs(xn - x) <= 1e-13 * std::max(x, kFpMin)) {
      x = xn;
      break;
    }
    x = xn;
  }
  return x / rate;
}

double scaled_t_pdf(const ScaledTLaw& law, double x) {
  if (!(law.scale > 0.0)) throw std::domain_error("scaled_t_pdf: scale must be > 0");
  return student_t_pdf((x - law.center) / law.scale, law.df) / law.scale;
}

double scaled_t_cdf(const ScaledTLaw& law, double x) {
  if (!(law.scale > 0.0)) throw std::domain_error("scaled_t_cdf: scale must be > 0");
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  return student_t_cdf((x - law.center) / law.scale, law.df);
}

double scaled_t_interval_prob(const ScaledTLaw& law, double a, double b) {
  if (!(law.scale > 0.0) || !(law.df > 0.0)) {
    throw std::domain_error("scaled_t_interval_prob: invalid law");
  }
  if (!(a <= b)) throw std::domain_error("scaled_t_interval_prob: requires a <= b");
  if (a == b) return 0.0;
  double za = std::isinf(a) ? -kInf : (a - law.center) / law.scale;
  double zb = std::isinf(b) ? kInf : (b - law.center) / law.scale;
  if (za >= 0.0) {
    // upper-tail interval: difference of survival functions keeps precision
    double sa = std::isinf(za) ? 0.0 : student_t_cdf(-za, law.df);
    double sb = std::isinf(zb) ? 0.0 : student_t_cdf(-zb, law.df);
    return sa - sb;
  }
  double fa = std::isinf(za) ? 0.0 : student_t_cdf(za, law.df);
  double fb = std::isinf(zb) ? 1.0 : student_t_cdf(zb, law.df);
  return fb - fa;
}

double sample_normal(RandomStream& rng, double mean, double sd) {
  if (!(sd > 0.0)) throw std::domain_error("sample_normal: sd must be > 0");
  return mean + sd * std_normal_quantile(rng.next_uniform());
}

namespace {

double sample_standard_gamma(RandomStream& rng, double shape) {
  if (shape < 1.0) {
    // Boost: G(a) = G(a+1) * U^{1/a}
    double u = rng.next_uniform();
    return sample_standard_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = std_normal_quantile(rng.next_uniform());
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = rng.next_uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double sample_gamma(RandomStream& rng, double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    throw std::domain_error("sample_gamma: shape and rate must be > 0");
  }
  return sample_standard_gamma(rng, shape) / rate;
}

double sample_chi_squared(RandomStream& rng, double df) {
  if (!(df > 0.0)) throw std::domain_error("sample_chi_squared: df must be > 0");
  return sample_gamma(rng, 0.5 * df, 0.5);
}

double sample_truncated_normal(RandomStream& rng, double mean, double sd,
                               double lo, double hi) {
  if (!(sd > 0.0)) throw std::domain_error("sample_truncated_normal: sd must be > 0");
  if (!(lo < hi)) throw std::domain_error("sample_truncated_normal: requires lo < hi");
  double pa = std::isinf(lo) ? 0.0 : std_normal_cdf((lo - mean) / sd);
  double pb = std::isinf(hi) ? 1.0 : std_normal_cdf((hi - mean) / sd);
  double mass = pb - pa;
  if (!(mass >= 1e-300)) {
    throw NumericError("sample_truncated_normal: truncation mass underflowed");
  }
  double p = pa + mass * rng.next_uniform();
  if (p <= 0.0) p = kFpMin;
  if (p >= 1.0) p = 1.0 - kEps;
  double x = mean + sd * std_normal_quantile(p);
  if (x <= lo) x = std::nextafter(lo, hi);
  if (x > hi) x = hi;
  return x;
}

double bivariate_t_logpdf(const std::array<double, 2>& u, double df,
                          const std::array<double, 2>& mean,
                          const std::array<double, 2>& scale_diag) {
  if (!(df > 0.0)) throw std::domain_error("bivariate_t_logpdf: df must be > 0");
  if (!(scale_diag[0] > 0.0) || !(scale_diag[1] > 0.0)) {
    throw std::domain_error("bivariate_t_logpdf: scale matrix must be positive definite");
  }
  double d0 = u[0] - mean[0];
  double d1 = u[1] - mean[1];
  double q = d0 * d0 / scale_diag[0] + d1 * d1 / scale_diag[1];
  return std::lgamma(0.5 * (df + 2.0)) - std::lgamma(0.5 * df) -
         std::log(df * M_PI) -
         0.5 * (std::log(scale_diag[0]) + std::log(scale_diag[1])) -
         0.5 * (df + 2.0) * std::log1p(q / df);
}

}  // namespace relbel
