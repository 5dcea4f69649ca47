// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "relbel/bias.hpp"
#include "relbel/checks.hpp"
#include "relbel/relative_belief.hpp"

namespace relbel {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct ModelCheck {
  // the pooled sample as one normality check (location-invariant, so raw
  // values and grand-mean residuals give the same answer)
  ShapiroWilkResult pooled_sample;
  // per-arm centered residuals pooled into one test
  ShapiroWilkResult pooled_residuals;
};

ModelCheck check_model(const TwoArmData& data);

struct AnalysisOptions {
  Hyperparameters prior;
  double delta = 0.0;
  LawMode mode = LawMode::paper_literal;
  double gamma_credible = 0.95;
  std::int64_t reps = 100000;
  std::uint64_t seed = 1;
  double conflict_threshold = 0.05;
  std::optional<double> noninferiority_margin;  // interval (margin, +inf)
  bool with_bias = false;
  int alternative_bin = 1;
};

struct AnalysisReport {
  SufficientStats stats;
  ModelCheck model_check;
  ConflictReport prior_check;
  RBAnalysis rb;
  std::optional<IntervalHypothesis> noninferiority;
  std::optional<double> noninferiority_margin;
  std::optional<BiasReport> bias;
  AnalysisOptions options;
};

// elicit -> check model -> check prior -> rb analysis -> optional blocks
AnalysisReport run_analysis(const TwoArmData& data, const AnalysisOptions& options);

// --- JSON ---------------------------------------------------------------

nlohmann::json to_json(const Hyperparameters& hyper);
Hyperparameters hyperparameters_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SufficientStats& stats);
nlohmann::json to_json(const ShapiroWilkResult& sw);
nlohmann::json to_json(const ModelCheck& mc);
nlohmann::json to_json(const ConflictReport& report);
nlohmann::json to_json(const BiasEstimate& est);
nlohmann::json to_json(const BiasReport& report);
nlohmann::json to_json(const CredibleRegion& region);
nlohmann::json to_json(const IntervalHypothesis& h);
nlohmann::json to_json(const RBAnalysis& analysis, bool include_rows = true);
nlohmann::json to_json(const AnalysisReport& report);

// --- CSV ----------------------------------------------------------------

// bin_index, lower, upper, prior_mass, posterior_mass, rb
void write_rb_table_csv(std::ostream& out, const RBAnalysis& analysis);

// fine-grid prior density, posterior density and their ratio over psi
void write_density_table_csv(std::ostream& out, const DifferenceLaws& laws,
                             int points = 801);

// series,theoretical,sample — per-arm residual QQ data, optionally with the
// pooled-residual series appended
void write_qq_csv(std::ostream& out, const TwoArmData& data, bool include_pooled);

// n_e, n_r, p_against, se_against, p_for, se_for
void write_design_csv(std::ostream& out, const std::vector<DesignRow>& rows);

}  // namespace relbel
