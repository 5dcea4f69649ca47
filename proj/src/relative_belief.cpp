// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include "relbel/relative_belief.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace relbel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStabilityFloor = 1e-12;
constexpr double kTieRelTol = 1e-12;

bool rb_tied(double a, double b) {
  return std::fabs(a - b) <= kTieRelTol * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

std::string to_string(LawMode mode) {
  return mode == LawMode::paper_literal ? "paper_literal" : "derived";
}

LawMode law_mode_from_string(const std::string& name) {
  if (name == "paper_literal" || name == "paper-literal") return LawMode::paper_literal;
  if (name == "derived") return LawMode::derived;
  throw std::domain_error("unknown law mode: " + name);
}

std::string to_string(Evidence e) {
  switch (e) {
    case Evidence::evidence_for_weak: return "evidence_for_weak";
    case Evidence::evidence_for_strong: return "evidence_for_strong";
    case Evidence::evidence_against_weak: return "evidence_against_weak";
    case Evidence::evidence_against_strong: return "evidence_against_strong";
    case Evidence::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ScaledTLaw prior_difference_law(const Hyperparameters& hyper, LawMode mode) {
  validate(hyper);
  ScaledTLaw law;
  law.center = 0.0;
  law.df = 2.0 * hyper.alpha0;
  law.scale = std::sqrt(hyper.tau0_sq * hyper.beta0 / hyper.alpha0);
  if (mode == LawMode::derived) law.scale *= std::sqrt(2.0);
  return law;
}

ScaledTLaw posterior_difference_law(const Hyperparameters& hyper,
                                    const SufficientStats& stats, LawMode mode) {
  validate(hyper);
  if (stats.n_e < 1 || stats.n_r < 1 || !(stats.s2 >= 0.0)) {
    throw std::domain_error("posterior_difference_law: invalid sufficient statistics");
  }
  const double n = stats.n_e + stats.n_r;
  const double k = n - 2.0;
  ScaledTLaw law;
  if (mode == LawMode::paper_literal) {
    const double nu = n + 2.0 * hyper.alpha0 - 4.0;
    if (!(nu > 0.0)) {
      throw std::domain_error("posterior_difference_law: df n_E+n_R+2*alpha0-4 must be > 0");
    }
    const double sp2 = (2.0 * hyper.beta0 + k * stats.s2) / nu;
    law.center = stats.xbar_e - stats.xbar_r;
    law.scale = std::sqrt(sp2 * (1.0 / stats.n_e + 1.0 / stats.n_r));
    law.df = nu;
  } else {
    const double a_n = 0.5 * (n + 2.0 * hyper.alpha0);
    const double b_n = 0.5 * (2.0 * hyper.beta0 + k * stats.s2);
    if (!(b_n > 0.0)) {
      throw std::domain_error("posterior_difference_law: degenerate posterior rate");
    }
    const double prec = 1.0 / hyper.tau0_sq;
    const double m_e = (stats.n_e * stats.xbar_e + hyper.mu0 * prec) / (stats.n_e + prec);
    const double m_r = (stats.n_r * stats.xbar_r + hyper.mu0 * prec) / (stats.n_r + prec);
    const double c = 1.0 / (stats.n_e + prec) + 1.0 / (stats.n_r + prec);
    law.center = m_e - m_r;
    law.scale = std::sqrt(c * b_n / a_n);
    law.df = 2.0 * a_n;
  }
  return law;
}

DifferenceLaws difference_laws(const Hyperparameters& hyper,
                               const SufficientStats& stats, LawMode mode) {
  return DifferenceLaws{prior_difference_law(hyper, mode),
                        posterior_difference_law(hyper, stats, mode), mode};
}

double exact_posterior_draw(const Hyperparameters& hyper,
                            const SufficientStats& stats, RandomStream& rng) {
  validate(hyper);
  const double n = stats.n_e + stats.n_r;
  const double a_n = 0.5 * (n + 2.0 * hyper.alpha0);
  const double b_n = 0.5 * (2.0 * hyper.beta0 + (n - 2.0) * stats.s2);
  const double precision = sample_gamma(rng, a_n, b_n);  // 1/sigma^2
  const double sigma2 = 1.0 / precision;
  const double prec0 = 1.0 / hyper.tau0_sq;
  const double m_e = (stats.n_e * stats.xbar_e + hyper.mu0 * prec0) / (stats.n_e + prec0);
  const double m_r = (stats.n_r * stats.xbar_r + hyper.mu0 * prec0) / (stats.n_r + prec0);
  const double mu_e = sample_normal(rng, m_e, std::sqrt(sigma2 / (stats.n_e + prec0)));
  const double mu_r = sample_normal(rng, m_r, std::sqrt(sigma2 / (stats.n_r + prec0)));
  return mu_e - mu_r;
}

DeltaGrid DeltaGrid::for_laws(double delta, const ScaledTLaw& prior,
                              const ScaledTLaw& posterior, double tail_mass) {
  if (!(delta > 0.0)) throw std::domain_error("DeltaGrid: delta must be > 0");
  if (!(tail_mass > 0.0) || !(tail_mass < 0.5)) {
    throw std::domain_error("DeltaGrid: tail_mass must lie in (0, 0.5)");
  }
  double lo = kInf, hi = -kInf;
  for (const ScaledTLaw* law : {&prior, &posterior}) {
    double q = student_t_quantile(0.5 * tail_mass, law->df);
    lo = std::min(lo, law->center + law->scale * q);
    hi = std::max(hi, law->center - law->scale * q);
  }
  DeltaGrid grid;
  grid.delta = delta;
  // lower_edge(i_min) <= lo and upper_edge(i_max) >= hi
  grid.i_min = std::min(0, static_cast<int>(std::floor(0.5 * (lo / delta + 1.0))));
  grid.i_max = std::max(0, static_cast<int>(std::ceil(0.5 * (hi / delta - 1.0))));
  return grid;
}

const RBRow& RBAnalysis::row(int bin) const {
  if (bin < grid.i_min || bin > grid.i_max) {
    throw std::domain_error("RBAnalysis: bin outside grid");
  }
  return rows[bin - grid.i_min];
}

RBAnalysis rb_table(const DifferenceLaws& laws, const DeltaGrid& grid,
                    double gamma, ClassificationThresholds thresholds) {
  if (!(grid.delta > 0.0) || grid.i_min > 0 || grid.i_max < 0) {
    throw std::domain_error("rb_table: grid must have delta > 0 and i_min <= 0 <= i_max");
  }
  RBAnalysis analysis;
  analysis.grid = grid;
  analysis.mode = laws.mode;
  analysis.rows.reserve(grid.size());
  for (int i = grid.i_min; i <= grid.i_max; ++i) {
    RBRow row;
    row.bin = i;
    row.lower = grid.lower_edge(i);
    row.upper = grid.upper_edge(i);
    const double lo = (i == grid.i_min) ? -kInf : row.lower;   // lump left tail
    const double hi = (i == grid.i_max) ? kInf : row.upper;    // lump right tail
    row.prior_mass = scaled_t_interval_prob(laws.prior, lo, hi);
    row.posterior_mass = scaled_t_interval_prob(laws.posterior, lo, hi);
    row.unstable = row.prior_mass < kStabilityFloor;
    row.rb = row.posterior_mass / row.prior_mass;
    analysis.rows.push_back(row);
  }
  analysis.prior_coverage =
      scaled_t_interval_prob(laws.prior, grid.lower_edge(grid.i_min), grid.upper_edge(grid.i_max));
  analysis.posterior_coverage = scaled_t_interval_prob(
      laws.posterior, grid.lower_edge(grid.i_min), grid.upper_edge(grid.i_max));

  const RBRow& zero = analysis.row(0);
  if (zero.unstable) {
    throw NumericError("rb_table: prior mass at bin 0 is below the stability floor");
  }
  analysis.rb0 = zero.rb;
  analysis.prior_mass_at_0 = zero.prior_mass;
  analysis.posterior_mass_at_0 = zero.posterior_mass;
  analysis.strength0 = strength(analysis, 0);
  analysis.lrse_bin = lrse(analysis);
  analysis.lrse_at_boundary =
      analysis.lrse_bin == grid.i_min || analysis.lrse_bin == grid.i_max;
  analysis.credible = credible_region(analysis, gamma);
  analysis.classification = evidence_classification(analysis, thresholds);
  return analysis;
}

double strength(const RBAnalysis& analysis, int i0) {
  const RBRow& ref = analysis.row(i0);
  double total = 0.0;
  for (const RBRow& row : analysis.rows) {
    if (std::isnan(row.rb)) continue;  // 0/0 tail bin: no posterior mass
    if (row.rb <= ref.rb || rb_tied(row.rb, ref.rb)) total += row.posterior_mass;
  }
  return std::min(total, 1.0);
}

int lrse(const RBAnalysis& analysis) {
  double best = -kInf;
  for (const RBRow& row : analysis.rows) {
    if (!row.unstable && row.rb > best) best = row.rb;
  }
  if (!(best > -kInf)) {
    throw NumericError("lrse: no stable rows in the analysis");
  }
  bool found = false;
  int pick = 0;
  for (const RBRow& row : analysis.rows) {
    if (row.unstable || !rb_tied(row.rb, best)) continue;
    if (!found) {
      pick = row.bin;
      found = true;
      continue;
    }
    auto key = [](int b) { return std::make_pair(std::abs(b), b); };
    if (key(row.bin) < key(pick)) pick = row.bin;
  }
  return pick;
}

CredibleRegion credible_region(const RBAnalysis& analysis, double gamma) {
  if (!(gamma >= 0.0) || !(gamma < 1.0)) {
    throw std::domain_error("credible_region: requires 0 <= gamma < 1");
  }
  std::vector<const RBRow*> order;
  order.reserve(analysis.rows.size());
  for (const RBRow& row : analysis.rows) {
    if (!std::isnan(row.rb)) order.push_back(&row);
  }
  std::sort(order.begin(), order.end(),
            [](const RBRow* a, const RBRow* b) { return a->rb > b->rb; });

  CredibleRegion region;
  region.gamma = gamma;
  double cum = 0.0;
  size_t j = 0;
  while (j < order.size()) {
    // group rb ties so threshold sets stay well defined
    size_t k = j;
    double group_mass = 0.0;
    while (k < order.size() && rb_tied(order[k]->rb, order[j]->rb)) {
      group_mass += order[k]->posterior_mass;
      ++k;
    }
    if (j > 0 && cum + group_mass > gamma + kTieRelTol) break;
    for (size_t t = j; t < k; ++t) region.bins.push_back(order[t]->bin);
    cum += group_mass;
    region.threshold = order[j]->rb;
    j = k;
  }
  if (region.bins.empty()) {
    throw NumericError("credible_region: no scorable rows");
  }
  std::sort(region.bins.begin(), region.bins.end());
  region.posterior_mass = cum;
  region.contiguous = true;
  for (size_t t = 1; t < region.bins.size(); ++t) {
    if (region.bins[t] != region.bins[t - 1] + 1) {
      region.contiguous = false;
      break;
    }
  }
  region.lower = analysis.grid.lower_edge(region.bins.front());
  region.upper = analysis.grid.upper_edge(region.bins.back());
  return region;
}

IntervalHypothesis interval_hypothesis_rb(const DifferenceLaws& laws, double a,
                                          double b) {
  if (!(a < b)) throw std::domain_error("interval_hypothesis_rb: requires a < b");
  IntervalHypothesis h;
  h.prior_prob = scaled_t_interval_prob(laws.prior, a, b);
  h.posterior_prob = scaled_t_interval_prob(laws.posterior, a, b);
  if (h.prior_prob < kStabilityFloor) {
    throw NumericError("interval_hypothesis_rb: prior probability below stability floor");
  }
  h.rb = h.posterior_prob / h.prior_prob;
  return h;
}

Evidence evidence_classification(const RBAnalysis& analysis,
                                 ClassificationThresholds thresholds) {
  const double rb0 = analysis.rb0;
  const double s = analysis.strength0;
  const double slack = 1e-9;
  if (!(analysis.posterior_mass_at_0 <= s + slack) ||
      !(s <= rb0 * (1.0 + slack) + slack)) {
    throw NumericError(
        "evidence_classification: sandwich posterior0 <= strength <= rb0 violated");
  }
  if (rb0 == 1.0) return Evidence::inconclusive;
  if (rb0 > 1.0) {
    return s >= thresholds.large ? Evidence::evidence_for_strong
                                 : Evidence::evidence_for_weak;
  }
  if (s <= thresholds.small) return Evidence::evidence_against_strong;
  // the ambiguous discrete corner: sizable prior mass at 0, little posterior
  // mass, yet large strength
  if (analysis.prior_mass_at_0 >= thresholds.small &&
      analysis.posterior_mass_at_0 <= thresholds.small && s >= thresholds.large) {
    return Evidence::inconclusive;
  }
  return Evidence::evidence_against_weak;
}

}  // namespace relbel
