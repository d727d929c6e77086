// Copyright 2026 The qclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "qclone/cli.hpp"

namespace qclone::cli {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_decimal(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a finite number: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

json complex_json(complex_t z) { return json::array({round_json(z.real()), round_json(z.imag())}); }

json bloch_json(const BlochVector& m) {
  return json::array({round_json(m.mx), round_json(m.my), round_json(m.mz)});
}

const char* branch_name(Branch b) { return b == Branch::kMinus ? "minus" : "plus"; }

}  // namespace

double parse_real(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const double num = parse_decimal(text.substr(0, slash));
  const double den = parse_decimal(text.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

complex_t parse_complex(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
  throw std::invalid_argument("complex literal must be 're' or 're,im': '" + std::string(text) + "'");
}

StateVector parse_state(std::string_view spec, const Label& label) {
  spec = trim(spec);
  const double r = 1.0 / std::sqrt(2.0);
  const complex_t i(0.0, 1.0);
  auto make = [&](complex_t a, complex_t b) {
    return StateVector::normalized(Eigen::Vector2cd(a, b), Labels{label});
  };
  if (spec == "0") return make(1.0, 0.0);
  if (spec == "1") return make(0.0, 1.0);
  if (spec == "+") return make(r, r);
  if (spec == "-") return make(r, -r);
  if (spec == "+i") return make(r, i * r);
  if (spec == "-i") return make(r, -i * r);

  if (spec.starts_with("bloch:")) {
    const auto parts = split(spec.substr(6), ',');
    if (parts.size() != 2) throw std::invalid_argument("bloch state needs THETA,PHI");
    const double theta = parse_real(parts[0]);
    const double phi = parse_real(parts[1]);
    return make(std::cos(theta / 2.0), std::sin(theta / 2.0) * std::polar(1.0, phi));
  }
  if (spec.starts_with("amp:")) {
    const auto parts = split(spec.substr(4), ',');
    std::vector<double> v;
    for (auto p : parts) v.push_back(parse_real(p));
    if (v.size() == 2) return make(v[0], v[1]);
    if (v.size() == 4) return make({v[0], v[1]}, {v[2], v[3]});
    throw std::invalid_argument("amp state needs A0,A1 or RE0,IM0,RE1,IM1");
  }
  throw std::invalid_argument("unknown state spec '" + std::string(spec) + "'");
}

double round_json(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr) + 0.0;
}

std::string format_csv(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

nlohmann::json to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const ScalingPair& p) {
  json j{{"s0", round_json(p.s0)},
         {"s1", round_json(p.s1)},
         {"feasible", p.feasible},
         {"margin", round_json(p.margin)}};
  if (!p.reason.empty()) j["reason"] = p.reason;
  return j;
}

nlohmann::json to_json(const PrepState& p) {
  json amps = json::array();
  for (const auto& c : p.amplitudes()) amps.push_back(complex_json(c));
  return json{{"c1", round_json(p.c1)},
              {"c2", round_json(p.c2)},
              {"c4", round_json(p.c4)},
              {"theta1", round_json(p.theta1)},
              {"theta2", round_json(p.theta2)},
              {"theta4", round_json(p.theta4)},
              {"branch", {{"theta2", branch_name(p.branch.theta2)}, {"theta4", branch_name(p.branch.theta4)}}},
              {"amplitudes", std::move(amps)}};
}

nlohmann::json to_json(const CloneOutput& out) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < out.joint.amplitudes().size(); ++i) amps.push_back(complex_json(out.joint.amplitudes()(i)));
  return json{{"joint", {{"labels", out.joint.labels()}, {"amplitudes", std::move(amps)}}},
              {"rho_a0", to_json(out.rho_a0.entries())},
              {"rho_a1", to_json(out.rho_a1.entries())},
              {"bloch_in", bloch_json(out.m_in)},
              {"bloch_a0", bloch_json(out.m_out0)},
              {"bloch_a1", bloch_json(out.m_out1)},
              {"s0_est", round_json(out.s0_est)},
              {"s1_est", round_json(out.s1_est)},
              {"residual0", round_json(out.residual0)},
              {"residual1", round_json(out.residual1)},
              {"fidelity0", round_json(out.fidelity0)},
              {"fidelity1", round_json(out.fidelity1)}};
}

std::vector<double> sweep_grid(double step) {
  if (!(step > 0.0) || step > 0.5) throw std::invalid_argument("grid step must satisfy 0 < step <= 0.5");
  const auto n = static_cast<int>(std::floor(1.0 / step + 1e-9));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) grid.push_back(std::min(1.0, k * step));
  return grid;
}

std::vector<SweepRow> sweep(double step) {
  const auto grid = sweep_grid(step);
  const auto probes = probe_states();
  std::vector<SweepRow> rows;
  rows.reserve(grid.size() * grid.size());
  for (double s0 : grid) {
    for (double s1 : grid) {
      const ScalingPair pair = feasibility(s0, s1);
      SweepRow row{s0, s1, pair.feasible, pair.margin, {}, {}, {}, {}, {}, {}, {}, {}};
      if (pair.feasible) {
        const PrepState prep = solve_prep(pair);
        const StateVector ancilla = prep.state();
        double f0 = 0.0, f1 = 0.0, worst = 0.0;
        for (const auto& probe : probes) {
          const CloneOutput out = run_cloner(probe, ancilla);
          f0 += out.fidelity0;
          f1 += out.fidelity1;
          worst = std::max({worst, out.residual0, out.residual1});
        }
        const auto n = static_cast<double>(probes.size());
        row.c1 = prep.c1;
        row.c2 = prep.c2;
        row.c4 = prep.c4;
        row.theta2 = prep.theta2;
        row.theta4 = prep.theta4;
        row.fidelity0 = f0 / n;
        row.fidelity1 = f1 / n;
        row.residual_max = worst;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out(kSweepHeader);
  out += '\n';
  auto cell = [](const std::optional<double>& v) { return v ? format_csv(*v) : std::string(); };
  for (const auto& r : rows) {
    out += format_csv(r.s0) + ',' + format_csv(r.s1) + ',' + (r.feasible ? "true" : "false") + ',' +
           format_csv(r.margin) + ',' + cell(r.c1) + ',' + cell(r.c2) + ',' + cell(r.c4) + ',' + cell(r.theta2) +
           ',' + cell(r.theta4) + ',' + cell(r.fidelity0) + ',' + cell(r.fidelity1) + ',' + cell(r.residual_max) +
           '\n';
  }
  return out;
}

}  // namespace qclone::cli
