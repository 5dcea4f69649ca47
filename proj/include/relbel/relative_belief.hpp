// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "relbel/distributions.hpp"
#include "relbel/elicitation.hpp"
#include "relbel/trial_data.hpp"

namespace relbel {

// Two conventions for the marginal laws of mu_E - mu_R.
//
// paper_literal (default): the commonly printed closed forms — prior scale
// tau0 sqrt(beta0/alpha0) with df 2 alpha0; posterior centered at
// xbar_E - xbar_R with scale s_p sqrt(1/n_E + 1/n_R), df n_E + n_R +
// 2 alpha0 - 4, s_p^2 = (2 beta0 + (n_E+n_R-2) s^2) / df.
//
// derived: the exact conjugate mixture — prior scale picks up the sqrt(2)
// that the conditional difference N(0, 2 tau0^2 sigma^2) implies, and the
// posterior is the t implied by the normal-gamma posterior (shrunken
// center, df n_E + n_R + 2 alpha0).
enum class LawMode { paper_literal, derived };

std::string to_string(LawMode mode);
LawMode law_mode_from_string(const std::string& name);

ScaledTLaw prior_difference_law(const Hyperparameters& hyper, LawMode mode);
ScaledTLaw posterior_difference_law(const Hyperparameters& hyper,
                                    const SufficientStats& stats, LawMode mode);

struct DifferenceLaws {
  ScaledTLaw prior;
  ScaledTLaw posterior;
  LawMode mode = LawMode::paper_literal;
};

DifferenceLaws difference_laws(const Hyperparameters& hyper,
                               const SufficientStats& stats, LawMode mode);

// One draw of mu_E - mu_R from the normal-gamma posterior: 1/sigma^2 from
// its Gamma posterior, then the two conditional normal means.
double exact_posterior_draw(const Hyperparameters& hyper,
                            const SufficientStats& stats, RandomStream& rng);

// Bin i covers ((2i-1) delta, (2i+1) delta]; the end bins absorb the tails.
struct DeltaGrid {
  double delta = 1.0;
  int i_min = 0;  // <= 0
  int i_max = 0;  // >= 0

  double lower_edge(int i) const { return (2 * i - 1) * delta; }
  double upper_edge(int i) const { return (2 * i + 1) * delta; }
  int size() const { return i_max - i_min + 1; }

  // Smallest grid whose per-law tail mass beyond the interior is < tail_mass.
  static DeltaGrid for_laws(double delta, const ScaledTLaw& prior,
                            const ScaledTLaw& posterior, double tail_mass = 1e-6);
};

struct RBRow {
  int bin = 0;
  double lower = 0.0;
  double upper = 0.0;
  double prior_mass = 0.0;
  double posterior_mass = 0.0;
  double rb = 0.0;
  bool unstable = false;  // prior mass below 1e-12: excluded from LRSE search
};

enum class Evidence {
  evidence_for_weak,
  evidence_for_strong,
  evidence_against_weak,
  evidence_against_strong,
  inconclusive,
};

std::string to_string(Evidence e);

struct CredibleRegion {
  double gamma = 0.95;
  std::vector<int> bins;  // sorted ascending
  double lower = 0.0;     // interval form when contiguous
  double upper = 0.0;
  bool contiguous = true;
  double posterior_mass = 0.0;
  double threshold = 0.0;  // c_gamma: smallest tabulated rb kept in the region
};

// "small"/"large" strength cuts used to label evidence strength.
struct ClassificationThresholds {
  double small = 0.05;
  double large = 0.95;
};

struct RBAnalysis {
  DeltaGrid grid;
  LawMode mode = LawMode::paper_literal;
  std::vector<RBRow> rows;
  double rb0 = 0.0;
  double strength0 = 0.0;
  double prior_mass_at_0 = 0.0;
  double posterior_mass_at_0 = 0.0;
  int lrse_bin = 0;
  bool lrse_at_boundary = false;
  CredibleRegion credible;
  Evidence classification = Evidence::inconclusive;
  // mass each law puts on the grid before the end bins lump the tails
  double prior_coverage = 0.0;
  double posterior_coverage = 0.0;

  const RBRow& row(int bin) const;
};

// Full per-bin analysis: masses, rb, RB(0) with strength, LRSE, credible
// region at `gamma`, and the evidence classification.
RBAnalysis rb_table(const DifferenceLaws& laws, const DeltaGrid& grid,
                    double gamma = 0.95,
                    ClassificationThresholds thresholds = {});

// Posterior probability of {bins with rb <= rb(i0)}; ties at 1e-12 relative.
double strength(const RBAnalysis& analysis, int i0);

// Bin maximizing rb among stable rows; ties break toward smallest |i|, then
// toward negative i.
int lrse(const RBAnalysis& analysis);

// Relative-belief credible region: the largest rb-threshold set, scanning
// thresholds over the tabulated rb values, whose posterior mass does not
// exceed gamma (the top-rb group is always included, so the region always
// contains the LRSE).
CredibleRegion credible_region(const RBAnalysis& analysis, double gamma);

struct IntervalHypothesis {
  double prior_prob = 0.0;
  double posterior_prob = 0.0;
  double rb = 0.0;
};

// Evidence for the interval hypothesis mu_E - mu_R in (a, b].
IntervalHypothesis interval_hypothesis_rb(const DifferenceLaws& laws, double a,
                                          double b);

// Labels the evidence at bin 0 and re-asserts the discrete sandwich
// posterior_mass_at_0 <= strength0 <= rb0 (NumericError on violation).
Evidence evidence_classification(const RBAnalysis& analysis,
                                 ClassificationThresholds thresholds = {});

}  // namespace relbel
