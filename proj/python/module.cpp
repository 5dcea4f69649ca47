// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "relbel/report.hpp"

namespace py = pybind11;
using namespace relbel;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default: return py::none();
  }
}

TwoArmData make_data(const std::vector<double>& experimental,
                     const std::vector<double>& reference) {
  return TwoArmData{experimental, reference};
}

}  // namespace

PYBIND11_MODULE(_relbel, m) {
  m.doc() = "relative-belief equivalence and noninferiority analysis for "
            "two-arm normal trials";
  m.attr("__version__") = kVersion;

  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<Hyperparameters>(m, "Hyperparameters")
      .def(py::init<double, double, double, double>(), py::arg("mu0"),
           py::arg("tau0_sq"), py::arg("alpha0"), py::arg("beta0"))
      .def_readwrite("mu0", &Hyperparameters::mu0)
      .def_readwrite("tau0_sq", &Hyperparameters::tau0_sq)
      .def_readwrite("alpha0", &Hyperparameters::alpha0)
      .def_readwrite("beta0", &Hyperparameters::beta0)
      .def("__repr__", [](const Hyperparameters& h) {
        return to_json(h).dump();
      });

  py::class_<SufficientStats>(m, "SufficientStats")
      .def_readonly("xbar_e", &SufficientStats::xbar_e)
      .def_readonly("xbar_r", &SufficientStats::xbar_r)
      .def_readonly("s2", &SufficientStats::s2)
      .def_readonly("n_e", &SufficientStats::n_e)
      .def_readonly("n_r", &SufficientStats::n_r)
      .def("__repr__", [](const SufficientStats& s) { return to_json(s).dump(); });

  py::class_<ScaledTLaw>(m, "ScaledTLaw")
      .def(py::init<double, double, double>(), py::arg("center"), py::arg("scale"),
           py::arg("df"))
      .def_readwrite("center", &ScaledTLaw::center)
      .def_readwrite("scale", &ScaledTLaw::scale)
      .def_readwrite("df", &ScaledTLaw::df);

  // distributions
  m.def("std_normal_cdf", &std_normal_cdf, py::arg("x"));
  m.def("std_normal_quantile", &std_normal_quantile, py::arg("p"));
  m.def("student_t_cdf", &student_t_cdf, py::arg("x"), py::arg("df"));
  m.def("student_t_pdf", &student_t_pdf, py::arg("x"), py::arg("df"));
  m.def("gamma_cdf", &gamma_cdf, py::arg("x"), py::arg("shape"), py::arg("rate"));
  m.def("gamma_quantile", &gamma_quantile, py::arg("p"), py::arg("shape"),
        py::arg("rate"));
  m.def("scaled_t_interval_prob", &scaled_t_interval_prob, py::arg("law"),
        py::arg("a"), py::arg("b"));

  // trial data
  m.def(
      "sufficient_stats",
      [](const std::vector<double>& e, const std::vector<double>& r) {
        return sufficient_stats(make_data(e, r));
      },
      py::arg("experimental"), py::arg("reference"));
  m.def(
      "shapiro_wilk",
      [](const std::vector<double>& values) {
        ShapiroWilkResult r = shapiro_wilk(values);
        return py::make_tuple(r.w, r.p_value);
      },
      py::arg("values"));
  m.def(
      "qq_points",
      [](const std::vector<double>& values) {
        py::list out;
        for (const QQPoint& p : qq_points(values)) {
          out.append(py::make_tuple(p.theoretical, p.sample));
        }
        return out;
      },
      py::arg("values"));

  // elicitation
  m.def(
      "elicit",
      [](double m1, double m2, double s1_sq, double s2_sq, double gamma_vc) {
        return elicit({m1, m2, s1_sq, s2_sq, gamma_vc});
      },
      py::arg("m1"), py::arg("m2"), py::arg("s1_sq"), py::arg("s2_sq"),
      py::arg("gamma_vc") = 0.999);

  // laws
  m.def(
      "prior_difference_law",
      [](const Hyperparameters& h, const std::string& mode) {
        return prior_difference_law(h, law_mode_from_string(mode));
      },
      py::arg("hyper"), py::arg("mode") = "paper_literal");
  m.def(
      "posterior_difference_law",
      [](const Hyperparameters& h, const SufficientStats& s, const std::string& mode) {
        return posterior_difference_law(h, s, law_mode_from_string(mode));
      },
      py::arg("hyper"), py::arg("stats"), py::arg("mode") = "paper_literal");

  // rb analysis
  m.def(
      "rb_analysis",
      [](const Hyperparameters& hyper, const SufficientStats& stats, double delta,
         const std::string& mode, double gamma) {
        DifferenceLaws laws =
            difference_laws(hyper, stats, law_mode_from_string(mode));
        DeltaGrid grid = DeltaGrid::for_laws(delta, laws.prior, laws.posterior);
        return json_to_py(to_json(rb_table(laws, grid, gamma)));
      },
      py::arg("hyper"), py::arg("stats"), py::arg("delta"),
      py::arg("mode") = "paper_literal", py::arg("gamma") = 0.95);
  m.def(
      "interval_hypothesis",
      [](const Hyperparameters& hyper, const SufficientStats& stats, double a,
         double b, const std::string& mode) {
        DifferenceLaws laws =
            difference_laws(hyper, stats, law_mode_from_string(mode));
        IntervalHypothesis h = interval_hypothesis_rb(laws, a, b);
        return py::make_tuple(h.prior_prob, h.posterior_prob, h.rb);
      },
      py::arg("hyper"), py::arg("stats"), py::arg("a"), py::arg("b"),
      py::arg("mode") = "paper_literal");

  // bias
  m.def(
      "bias_report",
      [](const Hyperparameters& hyper, int n_e, int n_r, double delta,
         int alternative_bin, std::int64_t reps, std::uint64_t seed,
         const std::string& mode) {
        BiasSpec spec{hyper,  n_e,  n_r, delta, alternative_bin, reps, seed,
                      law_mode_from_string(mode)};
        BiasReport report;
        report.against = simulate_bias_against(spec);
        report.in_favor = simulate_bias_for(spec);
        report.n_e = n_e;
        report.n_r = n_r;
        report.delta = delta;
        report.alternative_bin = alternative_bin;
        report.reps = reps;
        report.seed = seed;
        report.mode = spec.mode;
        return json_to_py(to_json(report));
      },
      py::arg("hyper"), py::arg("n_e"), py::arg("n_r"), py::arg("delta"),
      py::arg("alternative_bin") = 1, py::arg("reps") = 100000,
      py::arg("seed") = 1, py::arg("mode") = "paper_literal");

  // conflict checks
  m.def(
      "check_prior",
      [](const Hyperparameters& hyper, const SufficientStats& stats,
         std::int64_t reps, double threshold, std::uint64_t seed) {
        return json_to_py(to_json(check_prior(hyper, stats, reps, threshold, seed)));
      },
      py::arg("hyper"), py::arg("stats"), py::arg("reps") = 100000,
      py::arg("threshold") = 0.05, py::arg("seed") = 1);

  // full pipeline
  m.def(
      "analyze",
      [](const std::vector<double>& experimental, const std::vector<double>& reference,
         const Hyperparameters& prior, double delta, const std::string& mode,
         double gamma, std::int64_t reps, std::uint64_t seed, double threshold,
         py::object noninferiority_margin, bool with_bias, int alternative_bin) {
        AnalysisOptions options;
        options.prior = prior;
        options.delta = delta;
        options.mode = law_mode_from_string(mode);
        options.gamma_credible = gamma;
        options.reps = reps;
        options.seed = seed;
        options.conflict_threshold = threshold;
        if (!noninferiority_margin.is_none()) {
          options.noninferiority_margin = noninferiority_margin.cast<double>();
        }
        options.with_bias = with_bias;
        options.alternative_bin = alternative_bin;
        return json_to_py(
            to_json(run_analysis(make_data(experimental, reference), options)));
      },
      py::arg("experimental"), py::arg("reference"), py::arg("prior"),
      py::arg("delta"), py::arg("mode") = "paper_literal", py::arg("gamma") = 0.95,
      py::arg("reps") = 100000, py::arg("seed") = 1, py::arg("threshold") = 0.05,
      py::arg("noninferiority_margin") = py::none(), py::arg("with_bias") = false,
      py::arg("alternative_bin") = 1);
}
