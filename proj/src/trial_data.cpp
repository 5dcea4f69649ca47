// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include "relbel/trial_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "relbel/distributions.hpp"

namespace relbel {

namespace {

void require_arm(const std::vector<double>& arm, const char* name) {
  if (arm.size() < 2) {
    throw std::domain_error(std::string("sufficient_stats: arm ") + name +
                            " needs at least 2 observations");
  }
  for (double v : arm) {
    if (!std::isfinite(v)) {
      throw std::domain_error(std::string("sufficient_stats: arm ") + name +
                              " contains a non-finite value");
    }
  }
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double centered_sumsq(const std::vector<double>& v, double m) {
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s;
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

SufficientStats sufficient_stats(const TwoArmData& data) {
  require_arm(data.experimental, "E");
  require_arm(data.reference, "R");
  const int ne = static_cast<int>(data.experimental.size());
  const int nr = static_cast<int>(data.reference.size());
  SufficientStats st;
  st.n_e = ne;
  st.n_r = nr;
  st.xbar_e = mean_of(data.experimental);
  st.xbar_r = mean_of(data.reference);
  st.s2 = (centered_sumsq(data.experimental, st.xbar_e) +
           centered_sumsq(data.reference, st.xbar_r)) /
          static_cast<double>(ne + nr - 2);
  return st;
}

std::vector<double> residuals(const TwoArmData& data) {
  SufficientStats st = sufficient_stats(data);
  std::vector<double> out;
  out.reserve(data.experimental.size() + data.reference.size());
  for (double v : data.experimental) out.push_back(v - st.xbar_e);
  for (double v : data.reference) out.push_back(v - st.xbar_r);
  return out;
}

std::vector<QQPoint> qq_points(std::span<const double> values) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw std::domain_error("qq_points: need at least 2 values");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<QQPoint> pts(n);
  for (int i = 0; i < n; ++i) {
    pts[i].theoretical = std_normal_quantile((i + 1 - 0.375) / (n + 0.25));
    pts[i].sample = sorted[i];
  }
  return pts;
}

TwoArmData read_two_arm_csv(std::istream& in) {
  TwoArmData data;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("two-arm CSV: empty input");
  }
  if (trimmed(line) != "arm,value") {
    throw std::runtime_error("two-arm CSV: expected header 'arm,value', got '" +
                             trimmed(line) + "'");
  }
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trimmed(line);
    if (t.empty()) continue;
    auto comma = t.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("two-arm CSV: line " + std::to_string(lineno) +
                               ": missing comma");
    }
    std::string arm = trimmed(t.substr(0, comma));
    std::string val = trimmed(t.substr(comma + 1));
    double x;
    try {
      size_t pos = 0;
      x = std::stod(val, &pos);
      if (pos != val.size()) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw std::runtime_error("two-arm CSV: line " + std::to_string(lineno) +
                               ": bad value '" + val + "'");
    }
    if (arm == "E") {
      data.experimental.push_back(x);
    } else if (arm == "R") {
      data.reference.push_back(x);
    } else {
      throw std::runtime_error("two-arm CSV: line " + std::to_string(lineno) +
                               ": arm must be E or R, got '" + arm + "'");
    }
  }
  return data;
}

TwoArmData read_two_arm_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  return read_two_arm_csv(in);
}

}  // namespace relbel
