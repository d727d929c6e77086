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

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "qclone/cli.hpp"
#include "qclone/gates.hpp"

namespace qclone::cli {

namespace {

using nlohmann::json;

constexpr double kPauliNormTol = 1e-6;

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", round_json(x));
  return buf;
}

std::string complex_text(complex_t z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", round_json(z.real()), round_json(z.imag()));
  return buf;
}

json circuit_json(const TwoQubitPreparation& prep) {
  json gates = json::array();
  for (const auto& g : prep.gates) gates.push_back(g.to_string());
  return gates;
}

void report_infeasible(const ScalingPair& pair, std::ostream& out, std::ostream& err) {
  out << json{{"scaling", to_json(pair)}}.dump(2) << '\n';
  err << "error: infeasible scaling pair (" << fixed(pair.s0) << ", " << fixed(pair.s1) << "): " << pair.reason
      << "; margin " << fixed(pair.margin) << '\n';
}

int cmd_solve(const std::string& s0_text, const std::string& s1_text, const std::string& format, std::ostream& out,
              std::ostream& err) {
  const ScalingPair pair = feasibility(parse_real(s0_text), parse_real(s1_text));
  if (!pair.feasible) {
    report_infeasible(pair, out, err);
    return kInfeasible;
  }
  const PrepState prep = solve_prep(pair);
  const auto circuit = prepare_two_qubit(prep.amplitudes(), kCopy, kAncilla);

  if (format == "json") {
    json j{{"scaling", to_json(pair)}, {"prep", to_json(prep)}, {"circuit", circuit_json(circuit)}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "s0        " << fixed(pair.s0) << '\n'
      << "s1        " << fixed(pair.s1) << '\n'
      << "margin    " << fixed(pair.margin) << '\n'
      << "c1        " << fixed(prep.c1) << '\n'
      << "c2        " << fixed(prep.c2) << '\n'
      << "c3        0\n"
      << "c4        " << fixed(prep.c4) << '\n'
      << "theta1    " << fixed(prep.theta1) << '\n'
      << "theta2    " << fixed(prep.theta2) << '\n'
      << "theta4    " << fixed(prep.theta4) << '\n';
  const auto amps = prep.amplitudes();
  static const char* kKets[] = {"|00>", "|01>", "|10>", "|11>"};
  for (std::size_t k = 0; k < 4; ++k) out << "C" << k + 1 << " " << kKets[k] << " " << complex_text(amps[k]) << '\n';
  out << "circuit  ";
  if (circuit.gates.empty()) out << " (none)";
  for (const auto& g : circuit.gates) out << ' ' << g.to_string();
  out << '\n';
  return kOk;
}

int cmd_clone(const std::string& state, const std::string& s0_text, const std::string& s1_text, std::ostream& out,
              std::ostream& err) {
  const StateVector input = parse_state(state, kOriginal);
  const ScalingPair pair = feasibility(parse_real(s0_text), parse_real(s1_text));
  if (!pair.feasible) {
    report_infeasible(pair, out, err);
    return kInfeasible;
  }
  const PrepState prep = solve_prep(pair);
  const CloneOutput result = run_cloner(input, prep);

  json in_amps = json::array();
  for (Eigen::Index i = 0; i < 2; ++i) {
    in_amps.push_back(json::array({round_json(input[i].real()), round_json(input[i].imag())}));
  }
  json j{{"scaling", to_json(pair)}, {"prep", to_json(prep)}, {"input", {{"amplitudes", std::move(in_amps)}}}};
  j.update(to_json(result));
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_sweep(const std::string& step_text, const std::string& path, std::ostream& out, std::ostream& err) {
  const std::string csv = to_csv(sweep(parse_real(step_text)));
  if (path.empty() || path == "-") {
    out << csv;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (file) file << csv;
  if (!file) {
    err << "error: cannot write '" << path << "'\n";
    return kUsage;
  }
  return kOk;
}

int cmd_pauli(const std::vector<std::string>& literals, std::ostream& out, std::ostream& err) {
  if (literals.size() != 4) throw std::invalid_argument("pauli needs exactly four coefficients X1..X4");
  std::array<complex_t, 4> x{};
  for (std::size_t k = 0; k < 4; ++k) x[k] = parse_complex(literals[k]);
  double norm = 0.0;
  for (const auto& v : x) norm += std::norm(v);
  norm = std::sqrt(norm);
  if (!(norm > 0.0)) throw std::invalid_argument("Bell coefficients are all zero");
  if (std::abs(norm - 1.0) > kPauliNormTol) {
    err << "warning: coefficients have norm " << fixed(norm) << "; renormalizing\n";
  }
  for (auto& v : x) v /= norm;

  const BellCoefficients coeffs(x);
  const Eigen::Matrix4cd m = bell_decompose(run_pauli_cloner(coeffs));
  const double off = max_off_diagonal(m);
  const bool diagonal = off < 1e-10;

  json diag = json::array();
  for (Eigen::Index j = 0; j < 4; ++j) diag.push_back(json::array({round_json(m(j, j).real()), round_json(m(j, j).imag())}));
  json j{{"order", {"Phi+", "Phi-", "Psi+", "Psi-"}},
         {"coefficients", to_json(Eigen::MatrixXcd(m))},
         {"diagonal", std::move(diag)},
         {"max_offdiagonal", round_json(off)},
         {"bell_diagonal", diagonal}};
  out << j.dump(2) << '\n';
  if (!diagonal) {
    err << "error: output is not Bell-diagonal (max off-diagonal " << fixed(off) << ")\n";
    return kUsage;
  }
  return kOk;
}

int cmd_verify(std::uint64_t seed, int trials, std::ostream& out) {
  if (trials < 1) throw std::invalid_argument("--trials must be at least 1");
  const auto results = run_verify(seed, trials);
  out << format_verify_report(seed, trials, results);
  const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed == r.total; });
  return ok ? kOk : kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymmetric quantum cloning network simulator", "qclone"};
  app.require_subcommand(1);

  std::string s0, s1, state = "0", format = "json", step, path;
  std::uint64_t seed = 42;
  int trials = 100;
  std::vector<std::string> pauli_args;

  auto* solve = app.add_subcommand("solve", "Solve for the preparation state of a scaling pair");
  solve->add_option("s0,--s0", s0, "Scaling factor of the original (decimal or p/q)")->required();
  solve->add_option("s1,--s1", s1, "Scaling factor of the copy (decimal or p/q)")->required();
  solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* clone = app.add_subcommand("clone", "Run the cloning network on one input state");
  clone->add_option("--state", state, "0, 1, +, -, +i, -i, bloch:THETA,PHI, amp:A0,A1 or amp:RE0,IM0,RE1,IM1");
  clone->add_option("--s0", s0, "Scaling factor of the original")->required();
  clone->add_option("--s1", s1, "Scaling factor of the copy")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate the feasible region on a grid as CSV");
  sweep_cmd->add_option("step,--step", step, "Grid step, 0 < step <= 0.5")->required();
  sweep_cmd->add_option("--out", path, "Output file (default stdout)");

  auto* pauli = app.add_subcommand("pauli", "Run the Pauli cloner for Bell coefficients X1..X4 ('re,im')");
  pauli->add_option("x", pauli_args, "Four complex coefficients")->expected(4);

  auto* verify = app.add_subcommand("verify", "Run the seeded invariant suites");
  verify->add_option("--seed", seed, "Generator seed");
  verify->add_option("--trials", trials, "Cases per suite (>= 1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*solve) return cmd_solve(s0, s1, format, out, err);
    if (*clone) return cmd_clone(state, s0, s1, out, err);
    if (*sweep_cmd) return cmd_sweep(step, path, out, err);
    if (*pauli) return cmd_pauli(pauli_args, out, err);
    if (*verify) return cmd_verify(seed, trials, out);
  } catch (const InfeasibleScaling& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qclone::cli
