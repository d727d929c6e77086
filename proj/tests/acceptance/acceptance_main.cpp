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

// Acceptance criteria runner: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "qclone/cli.hpp"
#include "qclone/cloner.hpp"
#include "qclone/gates.hpp"
#include "qclone/pauli.hpp"
#include "qclone/random.hpp"

using namespace qclone;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

double projector_error(const StateVector& psi, const DensityMatrix& rho) {
  const Eigen::VectorXcd v = psi.amplitudes();
  return max_abs_diff(rho.entries(), v * v.adjoint());
}

Outcome ac1_truth_table() {
  double worst = 0.0;
  for (int c = 0; c < 2; ++c) {
    for (int t = 0; t < 2; ++t) {
      const auto out = apply_cnot(StateVector::basis({c, t}, {"c", "t"}), "c", "t");
      const auto want = StateVector::basis({c, t ^ c}, {"c", "t"});
      worst = std::max(worst, (out.amplitudes() - want.amplitudes()).cwiseAbs().maxCoeff());
    }
  }
  return {worst == 0.0, fmt("max error %.3g over 4 rows", worst)};
}

Outcome ac2_preserver() {
  Rng rng(1001);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto psi = random_state(rng, {kOriginal});
    const auto out = run_cloner(psi, preserving_prep());
    worst = std::max({worst, projector_error(psi, out.rho_a0),
                      max_abs_diff(out.rho_a1.entries(), Eigen::Matrix2cd::Identity() / 2.0)});
  }
  return {worst < 1e-12, fmt("max error %.3g (tol 1e-12), 100 inputs", worst)};
}

Outcome ac3_swapper() {
  Rng rng(1002);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto psi = random_state(rng, {kOriginal});
    worst = std::max(worst, projector_error(psi, run_cloner(psi, swapping_prep()).rho_a1));
  }
  return {worst < 1e-12, fmt("max error %.3g (tol 1e-12), 100 inputs", worst)};
}

Outcome ac4_symmetric() {
  Rng rng(1003);
  double s_err = 0.0, f_err = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto out = run_cloner(random_state(rng, {kOriginal}), symmetric_prep());
    s_err = std::max({s_err, std::abs(out.s0_est - 2.0 / 3.0), std::abs(out.s1_est - 2.0 / 3.0)});
    f_err = std::max({f_err, std::abs(out.fidelity0 - 5.0 / 6.0), std::abs(out.fidelity1 - 5.0 / 6.0)});
  }
  return {s_err < 1e-8 && f_err < 1e-8, fmt("max |s-2/3| %.3g, max |F-5/6| %.3g (tol 1e-8), 1000 inputs", s_err, f_err)};
}

Outcome ac5_roundtrip() {
  Rng rng(1005);
  double target_err = 0.0, residual = 0.0;
  for (int k = 0; k < 500; ++k) {
    const ScalingPair target = random_feasible_pair(rng);
    const PrepState prep = solve_prep(target);
    const StateVector ancilla = prep.state();
    for (int p = 0; p < 10; ++p) {
      const auto out = run_cloner(random_state(rng, {kOriginal}), ancilla);
      target_err = std::max({target_err, std::abs(out.s0_est - target.s0), std::abs(out.s1_est - target.s1)});
      residual = std::max({residual, out.residual0, out.residual1});
    }
  }
  return {target_err < 1e-8 && residual < 1e-8,
          fmt("max target error %.3g, max residual %.3g (tol 1e-8), 500 pairs x 10 inputs", target_err, residual)};
}

Outcome ac6_boundary() {
  // Upper branch of the region boundary, solved for s1 given s0.
  double margin_err = 0.0, cos_max = 0.0;
  int solved = 0;
  for (int k = 0; k < 200; ++k) {
    const double s0 = k / 199.0;
    const double s1 = std::min(1.0, ((1.0 - s0) + std::sqrt((1.0 - s0) * (1.0 + 3.0 * s0))) / 2.0);
    const ScalingPair pair = feasibility(s0, s1);
    margin_err = std::max(margin_err, std::abs(pair.margin));
    try {
      const PrepState prep = solve_prep(pair);
      cos_max = std::max({cos_max, std::abs(prep.cos_arg2), std::abs(prep.cos_arg4)});
      ++solved;
    } catch (const std::exception&) {
    }
  }
  return {margin_err < 1e-9 && solved == 200 && cos_max <= 1.0 + 1e-10,
          fmt("max |margin| %.3g (tol 1e-9), max arccos argument %.17g", margin_err, cos_max) + ", solved " +
              std::to_string(solved) + "/200"};
}

Outcome ac7_pauli() {
  double unit_err = 0.0;
  for (int j = 0; j < 4; ++j) {
    const auto out = run_pauli_cloner(BellCoefficients::unit(static_cast<Bell>(j)));
    const auto want = tensor(bell_basis(kReference, kOriginal)[static_cast<std::size_t>(j)],
                             bell_basis(kCopy, kAncilla)[static_cast<std::size_t>(j)]);
    unit_err = std::max(unit_err, (out.amplitudes() - want.amplitudes()).cwiseAbs().maxCoeff());
  }
  Rng rng(1007);
  double off = 0.0, diag_err = 0.0;
  for (int k = 0; k < 500; ++k) {
    const BellCoefficients x(random_amplitudes4(rng));
    const Eigen::Matrix4cd m = bell_decompose(run_pauli_cloner(x));
    off = std::max(off, max_off_diagonal(m));
    for (Eigen::Index j = 0; j < 4; ++j) diag_err = std::max(diag_err, std::abs(m(j, j) - x[static_cast<std::size_t>(j)]));
  }
  return {unit_err < 1e-12 && off < 1e-10 && diag_err < 1e-10,
          fmt("unit error %.3g (tol 1e-12); ", unit_err) +
              fmt("max off-diagonal %.3g, max diagonal error %.3g (tol 1e-10), 500 samples", off, diag_err)};
}

Outcome ac8_preparation() {
  Rng rng(1008);
  double worst = 1.0;
  for (int k = 0; k < 200; ++k) {
    const auto prep = prepare_two_qubit(random_amplitudes4(rng));
    const auto built = simulate(StateVector::basis({0, 0}, {"a1", "b1"}), prep.gates);
    worst = std::min(worst, overlap_modulus(prep.target, built));
  }
  return {worst >= 1.0 - 1e-10, fmt("min overlap 1 - %.3g (tol 1e-10), 200 targets", 1.0 - worst)};
}

Outcome ac9_sweep() {
  std::set<std::pair<double, double>> feasible;
  int rows = 0;
  for (const auto& row : cli::sweep(0.5)) {
    ++rows;
    if (row.feasible) feasible.insert({row.s0, row.s1});
  }
  const std::set<std::pair<double, double>> want{{0.0, 0.0}, {0.0, 0.5}, {0.5, 0.0},
                                                 {0.5, 0.5}, {0.0, 1.0}, {1.0, 0.0}};
  return {rows == 9 && feasible == want,
          "feasible " + std::to_string(feasible.size()) + " of " + std::to_string(rows) + " grid points"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1", "CNOT truth table", 1.0, ac1_truth_table},
      {"AC2", "case (i) preserver", 1.0, ac2_preserver},
      {"AC3", "case (ii) swapper", 1.0, ac3_swapper},
      {"AC4", "case (iii) symmetric cloner", 5.0, ac4_symmetric},
      {"AC5", "solver round-trip", 30.0, ac5_roundtrip},
      {"AC6", "feasibility boundary", 5.0, ac6_boundary},
      {"AC7", "Pauli cloner", 10.0, ac7_pauli},
      {"AC8", "two-qubit preparation", 5.0, ac8_preparation},
      {"AC9", "sweep oracle at step 0.5", 1.0, ac9_sweep},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.passed && secs < c.budget_s;
    if (!ok) ++failures;
    std::printf("[%s] %s %s: %s; %.3f s (budget %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs,
                c.budget_s);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
