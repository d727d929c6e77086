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

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qclone/cloner.hpp"
#include "qclone/pauli.hpp"
#include "qclone/qstate.hpp"

namespace qclone::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInfeasible = 2 };

/// Entry point shared by the binary and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// ---- parsing -------------------------------------------------------------

/// Decimal literal or a fraction "p/q". Throws std::invalid_argument.
double parse_real(std::string_view text);

/// "re,im" or "re". Throws std::invalid_argument.
complex_t parse_complex(std::string_view text);

/// One-qubit state spec:
///   0, 1, +, -, +i, -i       named states
///   bloch:THETA,PHI          cos(THETA/2)|0> + e^{i PHI} sin(THETA/2)|1>
///   amp:A0,A1 | amp:RE0,IM0,RE1,IM1   raw amplitudes, renormalized
StateVector parse_state(std::string_view spec, const Label& label = kOriginal);

// ---- formatting ----------------------------------------------------------

/// x rounded to 12 significant digits, with -0 folded to 0.
double round_json(double x);

/// "%.9g" with -0 folded to "0".
std::string format_csv(double x);

nlohmann::json to_json(const ScalingPair& p);
nlohmann::json to_json(const PrepState& p);
nlohmann::json to_json(const CloneOutput& out);
nlohmann::json to_json(const Eigen::MatrixXcd& m);  // rows of [re, im]

// ---- sweep ---------------------------------------------------------------

struct SweepRow {
  double s0 = 0.0;
  double s1 = 0.0;
  bool feasible = false;
  double margin = 0.0;
  // Solution columns; empty for infeasible rows.
  std::optional<double> c1, c2, c4, theta2, theta4, fidelity0, fidelity1, residual_max;
};

inline constexpr std::string_view kSweepHeader =
    "s0,s1,feasible,margin,c1,c2,c4,theta2,theta4,fidelity0,fidelity1,residual_max";

/// Grid values 0, step, 2 step, ... up to 1 (clamped). Requires 0 < step <= 0.5.
std::vector<double> sweep_grid(double step);

/// Rows with s0 outer and s1 inner, both ascending. Fidelities are averaged
/// over the six probe states; residual_max is the worst scaled-form residual.
std::vector<SweepRow> sweep(double step);

std::string to_csv(const std::vector<SweepRow>& rows);

// ---- verify --------------------------------------------------------------

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
};

/// Runs every property suite for `trials` cases each with a seeded
/// generator. Output is a pure function of (seed, trials).
std::vector<SuiteResult> run_verify(std::uint64_t seed, int trials);

std::string format_verify_report(std::uint64_t seed, int trials, const std::vector<SuiteResult>& results);

}  // namespace qclone::cli
