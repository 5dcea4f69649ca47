// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include "relbel/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace relbel {

using nlohmann::json;

ModelCheck check_model(const TwoArmData& data) {
  ModelCheck mc;
  std::vector<double> pooled = data.experimental;
  pooled.insert(pooled.end(), data.reference.begin(), data.reference.end());
  mc.pooled_sample = shapiro_wilk(pooled);
  std::vector<double> res = residuals(data);
  mc.pooled_residuals = shapiro_wilk(res);
  return mc;
}

AnalysisReport run_analysis(const TwoArmData& data, const AnalysisOptions& options) {
  if (!(options.delta > 0.0)) throw std::domain_error("analyze: delta must be > 0");
  validate(options.prior);
  AnalysisReport report;
  report.options = options;
  report.stats = sufficient_stats(data);
  report.model_check = check_model(data);
  report.prior_check = check_prior(options.prior, report.stats, options.reps,
                                   options.conflict_threshold, options.seed);
  const DifferenceLaws laws =
      difference_laws(options.prior, report.stats, options.mode);
  const DeltaGrid grid =
      DeltaGrid::for_laws(options.delta, laws.prior, laws.posterior);
  report.rb = rb_table(laws, grid, options.gamma_credible);
  if (options.noninferiority_margin) {
    report.noninferiority_margin = options.noninferiority_margin;
    report.noninferiority = interval_hypothesis_rb(
        laws, *options.noninferiority_margin,
        std::numeric_limits<double>::infinity());
  }
  if (options.with_bias) {
    BiasSpec spec{options.prior,   report.stats.n_e,      report.stats.n_r,
                  options.delta,   options.alternative_bin, options.reps,
                  options.seed,    options.mode};
    BiasReport bias;
    bias.against = simulate_bias_against(spec);
    bias.in_favor = simulate_bias_for(spec);
    bias.n_e = spec.n_e;
    bias.n_r = spec.n_r;
    bias.delta = spec.delta;
    bias.alternative_bin = spec.alternative_bin;
    bias.reps = spec.reps;
    bias.seed = spec.seed;
    bias.mode = spec.mode;
    report.bias = bias;
  }
  return report;
}

json to_json(const Hyperparameters& hyper) {
  return json{{"mu0", hyper.mu0},
              {"tau0_sq", hyper.tau0_sq},
              {"alpha0", hyper.alpha0},
              {"beta0", hyper.beta0}};
}

Hyperparameters hyperparameters_from_json(const json& j) {
  Hyperparameters hyper;
  hyper.mu0 = j.at("mu0").get<double>();
  hyper.tau0_sq = j.at("tau0_sq").get<double>();
  hyper.alpha0 = j.at("alpha0").get<double>();
  hyper.beta0 = j.at("beta0").get<double>();
  validate(hyper);
  return hyper;
}

json to_json(const SufficientStats& stats) {
  return json{{"xbar_e", stats.xbar_e},
              {"xbar_r", stats.xbar_r},
              {"s2", stats.s2},
              {"n_e", stats.n_e},
              {"n_r", stats.n_r}};
}

json to_json(const ShapiroWilkResult& sw) {
  return json{{"w", sw.w}, {"p_value", sw.p_value}};
}

json to_json(const ModelCheck& mc) {
  return json{{"pooled_sample", to_json(mc.pooled_sample)},
              {"pooled_residuals", to_json(mc.pooled_residuals)}};
}

json to_json(const ConflictReport& report) {
  json j{{"p_variance", report.p_variance},
         {"threshold", report.threshold},
         {"verdict", to_string(report.verdict)},
         {"reps", report.reps},
         {"seed", report.seed}};
  if (report.p_means) {
    j["p_means"] = *report.p_means;
  } else {
    j["p_means"] = nullptr;
  }
  return j;
}

json to_json(const BiasEstimate& est) {
  return json{{"p", est.p},
              {"se", est.se},
              {"reps", est.reps},
              {"discarded", est.discarded}};
}

json to_json(const BiasReport& report) {
  return json{{"against", to_json(report.against)},
              {"in_favor", to_json(report.in_favor)},
              {"n_e", report.n_e},
              {"n_r", report.n_r},
              {"delta", report.delta},
              {"alternative_bin", report.alternative_bin},
              {"reps", report.reps},
              {"seed", report.seed},
              {"mode", to_string(report.mode)}};
}

json to_json(const CredibleRegion& region) {
  return json{{"gamma", region.gamma},
              {"bins", region.bins},
              {"interval_lower", region.lower},
              {"interval_upper", region.upper},
              {"contiguous", region.contiguous},
              {"posterior_mass", region.posterior_mass},
              {"threshold", region.threshold}};
}

json to_json(const IntervalHypothesis& h) {
  return json{{"prior_prob", h.prior_prob},
              {"posterior_prob", h.posterior_prob},
              {"rb", h.rb}};
}

json to_json(const RBAnalysis& analysis, bool include_rows) {
  json j{{"delta", analysis.grid.delta},
         {"i_min", analysis.grid.i_min},
         {"i_max", analysis.grid.i_max},
         {"mode", to_string(analysis.mode)},
         {"rb0", analysis.rb0},
         {"strength0", analysis.strength0},
         {"prior_mass_at_0", analysis.prior_mass_at_0},
         {"posterior_mass_at_0", analysis.posterior_mass_at_0},
         {"lrse_bin", analysis.lrse_bin},
         {"lrse_at_boundary", analysis.lrse_at_boundary},
         {"credible", to_json(analysis.credible)},
         {"classification", to_string(analysis.classification)},
         {"prior_coverage", analysis.prior_coverage},
         {"posterior_coverage", analysis.posterior_coverage}};
  if (include_rows) {
    json rows = json::array();
    for (const RBRow& row : analysis.rows) {
      rows.push_back(json{{"bin", row.bin},
                          {"lower", row.lower},
                          {"upper", row.upper},
                          {"prior_mass", row.prior_mass},
                          {"posterior_mass", row.posterior_mass},
                          {"rb", std::isfinite(row.rb) ? json(row.rb) : json(nullptr)},
                          {"unstable", row.unstable}});
    }
    j["rows"] = std::move(rows);
  }
  return j;
}

json to_json(const AnalysisReport& report) {
  json j{{"schema_version", kSchemaVersion},
         {"version", kVersion},
         {"seed", report.options.seed},
         {"mode", to_string(report.options.mode)},
         {"delta", report.options.delta},
         {"reps", report.options.reps},
         {"prior", to_json(report.options.prior)},
         {"sufficient_stats", to_json(report.stats)},
         {"model_check", to_json(report.model_check)},
         {"prior_check", to_json(report.prior_check)},
         {"rb", to_json(report.rb)}};
  if (report.noninferiority) {
    json block = to_json(*report.noninferiority);
    block["margin"] = *report.noninferiority_margin;
    j["noninferiority"] = std::move(block);
  }
  if (report.bias) {
    j["bias"] = to_json(*report.bias);
  }
  return j;
}

void write_rb_table_csv(std::ostream& out, const RBAnalysis& analysis) {
  out << "bin_index,lower,upper,prior_mass,posterior_mass,rb\n";
  char buf[192];
  for (const RBRow& row : analysis.rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%.12g,%.12g,%.12g\n", row.bin,
                  row.lower, row.upper, row.prior_mass, row.posterior_mass, row.rb);
    out << buf;
  }
}

void write_density_table_csv(std::ostream& out, const DifferenceLaws& laws,
                             int points) {
  if (points < 2) throw std::domain_error("density table: need at least 2 points");
  const double tail = 1e-4;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const ScaledTLaw* law : {&laws.prior, &laws.posterior}) {
    const double q = student_t_quantile(1.0 - tail, law->df) * law->scale;
    lo = std::min(lo, law->center - q);
    hi = std::max(hi, law->center + q);
  }
  out << "psi,prior_density,posterior_density,rb\n";
  char buf[160];
  for (int i = 0; i < points; ++i) {
    const double psi = lo + (hi - lo) * i / (points - 1);
    const double fp = scaled_t_pdf(laws.prior, psi);
    const double fq = scaled_t_pdf(laws.posterior, psi);
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g\n", psi, fp, fq,
                  fq / fp);
    out << buf;
  }
}

void write_qq_csv(std::ostream& out, const TwoArmData& data, bool include_pooled) {
  const SufficientStats stats = sufficient_stats(data);
  out << "series,theoretical,sample\n";
  char buf[128];
  auto emit = [&](const char* label, const std::vector<double>& values) {
    for (const QQPoint& pt : qq_points(values)) {
      std::snprintf(buf, sizeof(buf), "%s,%.12g,%.12g\n", label, pt.theoretical,
                    pt.sample);
      out << buf;
    }
  };
  std::vector<double> res_e, res_r;
  for (double v : data.experimental) res_e.push_back(v - stats.xbar_e);
  for (double v : data.reference) res_r.push_back(v - stats.xbar_r);
  emit("E", res_e);
  emit("R", res_r);
  if (include_pooled) {
    std::vector<double> pooled = res_e;
    pooled.insert(pooled.end(), res_r.begin(), res_r.end());
    emit("pooled", pooled);
  }
}

void write_design_csv(std::ostream& out, const std::vector<DesignRow>& rows) {
  out << "n_e,n_r,p_against,se_against,p_for,se_for\n";
  char buf[160];
  for (const DesignRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%.12g,%.12g,%.12g,%.12g\n", row.n_e,
                  row.n_r, row.against.p, row.against.se, row.in_favor.p,
                  row.in_favor.se);
    out << buf;
  }
}

}  // namespace relbel
