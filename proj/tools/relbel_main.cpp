// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0

// relbel: relative-belief equivalence and noninferiority analysis for
// two-arm normal trials.
//
// Exit codes: 0 success; 1 a --fail-on gate fired; 2 input error;
// 3 numeric error.
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relbel/report.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitGate = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

struct PriorInput {
  std::string path;
  std::string inline_json;

  relbel::Hyperparameters load() const {
    if (!inline_json.empty()) {
      return relbel::hyperparameters_from_json(json::parse(inline_json));
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open prior file: " + path);
    return relbel::hyperparameters_from_json(json::parse(in));
  }

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("--prior", path, "prior hyperparameters JSON file");
    auto* inl = cmd->add_option("--prior-json", inline_json,
                                "prior hyperparameters as an inline JSON object");
    file->excludes(inl);
    cmd->final_callback([this, cmd] {
      if (path.empty() && inline_json.empty()) {
        throw CLI::RequiredError(cmd->get_name() + ": --prior or --prior-json");
      }
    });
  }
};

int run(int argc, char** argv) {
  CLI::App app{
      "relative-belief equivalence/noninferiority analysis for two-arm normal "
      "trials"};
  app.require_subcommand(1);

  // ---- elicit ----
  auto* elicit_cmd = app.add_subcommand(
      "elicit", "translate virtual-certainty intervals into prior hyperparameters");
  relbel::ElicitationSpec spec;
  std::string elicit_out, elicit_spec_path;
  auto* m1_opt =
      elicit_cmd->add_option("--m1", spec.m1, "lower virtual-certainty bound on the means");
  auto* m2_opt =
      elicit_cmd->add_option("--m2", spec.m2, "upper virtual-certainty bound on the means");
  auto* s1_opt = elicit_cmd->add_option(
      "--s1-sq", spec.s1_sq, "lower bound on the squared measurement half-length");
  auto* s2_opt = elicit_cmd->add_option(
      "--s2-sq", spec.s2_sq, "upper bound on the squared measurement half-length");
  elicit_cmd->add_option("--gamma-vc", spec.gamma_vc,
                         "virtual-certainty level (default 0.999)");
  auto* spec_opt = elicit_cmd->add_option(
      "--spec", elicit_spec_path,
      "elicitation spec as JSON {m1, m2, s1_sq, s2_sq[, gamma_vc]}");
  for (auto* opt : {m1_opt, m2_opt, s1_opt, s2_opt}) spec_opt->excludes(opt);
  elicit_cmd->final_callback([&] {
    if (elicit_spec_path.empty() &&
        !(m1_opt->count() && m2_opt->count() && s1_opt->count() && s2_opt->count())) {
      throw CLI::RequiredError("elicit: --m1/--m2/--s1-sq/--s2-sq or --spec");
    }
  });
  elicit_cmd->add_option("-o,--output", elicit_out, "output path (default stdout)");

  // ---- analyze ----
  auto* analyze_cmd =
      app.add_subcommand("analyze", "full pipeline: stats, checks, RB analysis");
  std::string data_path, analyze_out, rb_table_path, plot_table_path, mode_name =
      "paper-literal";
  PriorInput analyze_prior;
  relbel::AnalysisOptions options;
  int plot_points = 801;
  std::vector<std::string> fail_on;
  std::optional<double> noninf_margin;
  analyze_cmd->add_option("--data", data_path, "two-arm CSV (header arm,value)")
      ->required();
  analyze_prior.attach(analyze_cmd);
  analyze_cmd->add_option("--delta", options.delta, "clinical margin (> 0)")
      ->required();
  analyze_cmd->add_option("--mode", mode_name,
                          "marginal-law convention: paper-literal | derived");
  analyze_cmd->add_option("--gamma", options.gamma_credible,
                          "credible-region level (default 0.95)");
  analyze_cmd->add_option("--reps", options.reps, "Monte Carlo repetitions");
  analyze_cmd->add_option("--seed", options.seed, "random seed");
  analyze_cmd->add_option("--threshold", options.conflict_threshold,
                          "prior-data conflict threshold (default 0.05)");
  analyze_cmd->add_option("--noninferiority", noninf_margin,
                          "also assess the interval (margin, +inf)");
  analyze_cmd->add_flag("--bias", options.with_bias,
                        "include the prior-bias Monte Carlo block");
  analyze_cmd->add_option("--alternative-bin", options.alternative_bin,
                          "alternative bin for bias-for (default 1)");
  analyze_cmd->add_option("--rb-table", rb_table_path, "write the per-bin RB table CSV");
  analyze_cmd->add_option("--plot-table", plot_table_path,
                          "write the fine-grid density/rb curve CSV");
  analyze_cmd->add_option("--plot-points", plot_points,
                          "points in the plot table (default 801)");
  analyze_cmd->add_option("-o,--output", analyze_out, "report path (default stdout)");
  analyze_cmd->add_option("--fail-on", fail_on,
                          "exit 1 on: conflict | evidence-against | evidence-for");

  // ---- bias ----
  auto* bias_cmd =
      app.add_subcommand("bias", "Monte Carlo prior-bias probabilities");
  PriorInput bias_prior;
  relbel::BiasSpec bias_spec;
  std::string bias_out, bias_mode_name = "paper-literal";
  bias_prior.attach(bias_cmd);
  bias_cmd->add_option("--n-e", bias_spec.n_e, "experimental arm size")->required();
  bias_cmd->add_option("--n-r", bias_spec.n_r, "reference arm size")->required();
  bias_cmd->add_option("--delta", bias_spec.delta, "clinical margin")->required();
  bias_cmd->add_option("--alternative-bin", bias_spec.alternative_bin,
                       "bin for the bias-for alternative (default 1)");
  bias_cmd->add_option("--reps", bias_spec.reps, "repetitions (default 100000)");
  bias_cmd->add_option("--seed", bias_spec.seed, "random seed");
  bias_cmd->add_option("--mode", bias_mode_name,
                       "rb convention inside the simulation");
  bias_cmd->add_option("-o,--output", bias_out, "output path (default stdout)");

  // ---- design ----
  auto* design_cmd = app.add_subcommand(
      "design", "bias probabilities over a grid of sample sizes (CSV)");
  PriorInput design_prior;
  double design_delta = 0.0;
  std::vector<std::string> design_sizes;
  std::int64_t design_reps = 100000;
  std::uint64_t design_seed = 1;
  int design_alt = 1;
  std::string design_out, design_mode_name = "paper-literal";
  design_prior.attach(design_cmd);
  design_cmd->add_option("--delta", design_delta, "clinical margin")->required();
  design_cmd->add_option("--n", design_sizes,
                         "sample-size pair NE,NR (repeatable)");
  design_cmd->add_option("--reps", design_reps, "repetitions per pair");
  design_cmd->add_option("--seed", design_seed, "random seed");
  design_cmd->add_option("--alternative-bin", design_alt, "bias-for bin");
  design_cmd->add_option("--mode", design_mode_name, "rb convention");
  std::string design_format = "csv";
  design_cmd->add_option("--format", design_format, "output format: csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  design_cmd->add_option("-o,--output", design_out, "output path (default stdout)");

  // ---- check-model ----
  auto* model_cmd = app.add_subcommand("check-model",
                                       "Shapiro-Wilk normality check + QQ data");
  std::string model_data, model_out, qq_path;
  bool include_pooled = false;
  model_cmd->add_option("--data", model_data, "two-arm CSV")->required();
  model_cmd->add_option("--qq", qq_path, "write QQ plot data CSV");
  model_cmd->add_flag("--include-pooled", include_pooled,
                      "append the pooled-residual series to the QQ CSV");
  model_cmd->add_option("-o,--output", model_out, "output path (default stdout)");

  // ---- check-prior ----
  auto* prior_cmd =
      app.add_subcommand("check-prior", "sequential prior-data conflict check");
  PriorInput check_prior_input;
  std::string prior_data, prior_out;
  std::int64_t prior_reps = 100000;
  double prior_threshold = 0.05;
  std::uint64_t prior_seed = 1;
  std::vector<std::string> prior_fail_on;
  prior_cmd->add_option("--data", prior_data, "two-arm CSV")->required();
  check_prior_input.attach(prior_cmd);
  prior_cmd->add_option("--reps", prior_reps, "repetitions (default 100000)");
  prior_cmd->add_option("--threshold", prior_threshold,
                        "conflict threshold (default 0.05)");
  prior_cmd->add_option("--seed", prior_seed, "random seed");
  prior_cmd->add_option("-o,--output", prior_out, "output path (default stdout)");
  prior_cmd->add_option("--fail-on", prior_fail_on, "exit 1 on: conflict");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitInput;
  }

  if (elicit_cmd->parsed()) {
    if (!elicit_spec_path.empty()) {
      std::ifstream in(elicit_spec_path);
      if (!in) throw std::runtime_error("cannot open spec file: " + elicit_spec_path);
      json j = json::parse(in);
      spec.m1 = j.at("m1").get<double>();
      spec.m2 = j.at("m2").get<double>();
      spec.s1_sq = j.at("s1_sq").get<double>();
      spec.s2_sq = j.at("s2_sq").get<double>();
      if (j.contains("gamma_vc")) spec.gamma_vc = j["gamma_vc"].get<double>();
    }
    relbel::LocationElicitation loc = relbel::elicit_location(spec);
    relbel::VarianceElicitation var = relbel::elicit_variance(spec);
    json j{{"mu0", loc.mu0},
           {"tau0_sq", loc.tau0_sq},
           {"alpha0", var.alpha0},
           {"beta0", var.beta0},
           {"solver", json{{"gamma_vc", spec.gamma_vc},
                           {"residual_upper", var.residual_upper},
                           {"residual_lower", var.residual_lower}}}};
    write_text(elicit_out, j.dump(2));
    std::cerr << "el4 residuals: upper " << var.residual_upper << ", lower "
              << var.residual_lower << "\n";
    return kExitOk;
  }

  if (analyze_cmd->parsed()) {
    options.mode = relbel::law_mode_from_string(mode_name);
    options.prior = analyze_prior.load();
    options.noninferiority_margin = noninf_margin;
    relbel::TwoArmData data = relbel::read_two_arm_csv_file(data_path);
    relbel::AnalysisReport report = relbel::run_analysis(data, options);
    write_text(analyze_out, relbel::to_json(report).dump(2));
    if (!rb_table_path.empty()) {
      std::ofstream out(rb_table_path);
      if (!out) throw std::runtime_error("cannot open: " + rb_table_path);
      relbel::write_rb_table_csv(out, report.rb);
    }
    if (!plot_table_path.empty()) {
      std::ofstream out(plot_table_path);
      if (!out) throw std::runtime_error("cannot open: " + plot_table_path);
      relbel::write_density_table_csv(
          out, relbel::difference_laws(options.prior, report.stats, options.mode),
          plot_points);
    }
    std::set<std::string> gates(fail_on.begin(), fail_on.end());
    for (const std::string& g : gates) {
      if (g != "conflict" && g != "evidence-against" && g != "evidence-for") {
        throw CLI::ValidationError("--fail-on: unknown gate '" + g + "'");
      }
    }
    if (gates.count("conflict") &&
        report.prior_check.verdict != relbel::ConflictVerdict::no_conflict) {
      std::cerr << "fail-on gate: prior-data conflict detected\n";
      return kExitGate;
    }
    if (gates.count("evidence-against") && report.rb.rb0 < 1.0) {
      std::cerr << "fail-on gate: evidence against equivalence (rb0 < 1)\n";
      return kExitGate;
    }
    if (gates.count("evidence-for") && report.rb.rb0 > 1.0) {
      std::cerr << "fail-on gate: evidence for equivalence (rb0 > 1)\n";
      return kExitGate;
    }
    return kExitOk;
  }

  if (bias_cmd->parsed()) {
    bias_spec.mode = relbel::law_mode_from_string(bias_mode_name);
    bias_spec.hyper = bias_prior.load();
    relbel::BiasReport report;
    report.against = relbel::simulate_bias_against(bias_spec);
    report.in_favor = relbel::simulate_bias_for(bias_spec);
    report.n_e = bias_spec.n_e;
    report.n_r = bias_spec.n_r;
    report.delta = bias_spec.delta;
    report.alternative_bin = bias_spec.alternative_bin;
    report.reps = bias_spec.reps;
    report.seed = bias_spec.seed;
    report.mode = bias_spec.mode;
    write_text(bias_out, relbel::to_json(report).dump(2));
    return kExitOk;
  }

  if (design_cmd->parsed()) {
    std::vector<std::pair<int, int>> n_list;
    for (const std::string& token : design_sizes) {
      auto comma = token.find(',');
      if (comma == std::string::npos) {
        throw CLI::ValidationError("--n expects NE,NR, got '" + token + "'");
      }
      n_list.emplace_back(std::stoi(token.substr(0, comma)),
                          std::stoi(token.substr(comma + 1)));
    }
    std::vector<relbel::DesignRow> rows = relbel::design_scan(
        design_prior.load(), design_delta, n_list, design_reps, design_seed,
        relbel::law_mode_from_string(design_mode_name), design_alt);
    if (design_format == "json") {
      json arr = json::array();
      for (const relbel::DesignRow& row : rows) {
        arr.push_back(json{{"n_e", row.n_e},
                           {"n_r", row.n_r},
                           {"against", relbel::to_json(row.against)},
                           {"in_favor", relbel::to_json(row.in_favor)}});
      }
      write_text(design_out, arr.dump(2));
    } else {
      std::ostringstream csv;
      relbel::write_design_csv(csv, rows);
      write_text(design_out, csv.str());
    }
    return kExitOk;
  }

  if (model_cmd->parsed()) {
    relbel::TwoArmData data = relbel::read_two_arm_csv_file(model_data);
    relbel::ModelCheck mc = relbel::check_model(data);
    relbel::SufficientStats stats = relbel::sufficient_stats(data);
    json j{{"model_check", relbel::to_json(mc)},
           {"n_e", stats.n_e},
           {"n_r", stats.n_r}};
    write_text(model_out, j.dump(2));
    if (!qq_path.empty()) {
      std::ofstream out(qq_path);
      if (!out) throw std::runtime_error("cannot open: " + qq_path);
      relbel::write_qq_csv(out, data, include_pooled);
    }
    return kExitOk;
  }

  if (prior_cmd->parsed()) {
    relbel::TwoArmData data = relbel::read_two_arm_csv_file(prior_data);
    relbel::SufficientStats stats = relbel::sufficient_stats(data);
    relbel::ConflictReport report = relbel::check_prior(
        check_prior_input.load(), stats, prior_reps, prior_threshold, prior_seed);
    write_text(prior_out, relbel::to_json(report).dump(2));
    for (const std::string& g : prior_fail_on) {
      if (g != "conflict") {
        throw CLI::ValidationError("--fail-on: unknown gate '" + g + "'");
      }
    }
    if (!prior_fail_on.empty() &&
        report.verdict != relbel::ConflictVerdict::no_conflict) {
      std::cerr << "fail-on gate: prior-data conflict detected\n";
      return kExitGate;
    }
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitOk;  // --help
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const relbel::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}
