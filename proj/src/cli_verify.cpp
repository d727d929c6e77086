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

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "qclone/cli.hpp"
#include "qclone/gates.hpp"
#include "qclone/random.hpp"

namespace qclone::cli {

namespace {

using Check = std::function<bool(Rng&)>;

struct Suite {
  const char* name;
  Check check;
};

double diff(const StateVector& a, const StateVector& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

const Labels kFour{"r", "a0", "a1", "b1"};

std::vector<Suite> suites() {
  return {
      {"qstate.density_trace",
       [](Rng& rng) {
         std::uniform_int_distribution<std::size_t> n(1, 4);
         const auto psi = random_state(rng, Labels(kFour.begin(), kFour.begin() + static_cast<long>(n(rng))));
         return std::abs(to_density(psi).entries().trace() - 1.0) < 1e-12;
       }},
      {"qstate.self_fidelity",
       [](Rng& rng) {
         const auto psi = random_state(rng, {"q"});
         return std::abs(fidelity_pure(psi, to_density(psi)) - 1.0) < 1e-12;
       }},
      {"qstate.bloch_roundtrip",
       [](Rng& rng) {
         const auto rho = from_bloch(random_bloch(rng));
         return max_abs_diff(from_bloch(bloch_vector(rho)).entries(), rho.entries()) < 1e-12;
       }},
      {"qstate.partial_trace_composes",
       [](Rng& rng) {
         const auto rho = to_density(random_state(rng, {"a0", "a1", "b1"}));
         const auto stepwise = partial_trace(partial_trace(rho, {"a0", "a1"}), {"a0"});
         return max_abs_diff(stepwise.entries(), partial_trace(rho, {"a0"}).entries()) < 1e-12;
       }},
      {"gates.cnot_involution",
       [](Rng& rng) {
         std::uniform_int_distribution<std::size_t> pick(0, 3);
         const auto psi = random_state(rng, kFour);
         const std::size_t c = pick(rng);
         const std::size_t t = (c + 1 + pick(rng) % 3) % 4;
         const auto once = apply_cnot(psi, kFour[c], kFour[t]);
         return std::abs(once.amplitudes().norm() - 1.0) < 1e-12 &&
                diff(apply_cnot(once, kFour[c], kFour[t]), psi) < 1e-12;
       }},
      {"gates.hadamard_involution",
       [](Rng& rng) {
         std::uniform_int_distribution<std::size_t> pick(0, 3);
         const auto psi = random_state(rng, kFour);
         const auto& q = kFour[pick(rng)];
         const auto once = apply_hadamard(psi, q);
         return std::abs(once.amplitudes().norm() - 1.0) < 1e-12 && diff(apply_hadamard(once, q), psi) < 1e-12;
       }},
      {"gates.two_qubit_preparation",
       [](Rng& rng) {
         const auto prep = prepare_two_qubit(random_amplitudes4(rng));
         const auto built = simulate(StateVector::basis({0, 0}, {"a1", "b1"}), prep.gates);
         return overlap_modulus(prep.target, built) >= 1.0 - 1e-10;
       }},
      {"cloner.normalization",
       [](Rng& rng) {
         const auto p = solve_prep(random_feasible_pair(rng), {});
         return std::abs(p.c1 * p.c1 + p.c2 * p.c2 + p.c4 * p.c4 - 1.0) < 1e-12;
       }},
      {"cloner.solver_roundtrip",
       [](Rng& rng) {
         const auto target = random_feasible_pair(rng);
         const auto out = run_cloner(random_state(rng, {"a0"}), solve_prep(target));
         return std::abs(out.s0_est - target.s0) < 1e-8 && std::abs(out.s1_est - target.s1) < 1e-8 &&
                static_cast<bool>(verify_scaling(out, 1e-8));
       }},
      {"cloner.fidelity_link",
       [](Rng& rng) {
         const auto in = random_state(rng, {"a0"});
         const auto out = run_cloner(in, solve_prep(random_feasible_pair(rng)));
         return std::abs(out.fidelity0 - (1.0 + out.s0_est) / 2.0) < 1e-8 &&
                std::abs(out.fidelity1 - (1.0 + out.s1_est) / 2.0) < 1e-8;
       }},
      {"pauli.bell_diagonal",
       [](Rng& rng) {
         const BellCoefficients x(random_amplitudes4(rng));
         const auto m = bell_decompose(run_pauli_cloner(x));
         if (max_off_diagonal(m) >= 1e-10) return false;
         for (std::size_t j = 0; j < 4; ++j) {
           if (std::abs(m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) - x[j]) >= 1e-10) return false;
         }
         return true;
       }},
      {"pauli.matches_cloner_network",
       [](Rng& rng) {
         const auto prep = solve_prep(random_feasible_pair(rng));
         const auto pauli = run_pauli_cloner(BellCoefficients::from_computational(prep.amplitudes()));
         const auto direct = apply_cloning_network(tensor(bell_basis(kReference, kOriginal)[0], prep.state()));
         return diff(pauli, direct) < 1e-12;
       }},
  };
}

}  // namespace

std::vector<SuiteResult> run_verify(std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  Rng rng(seed);
  std::vector<SuiteResult> results;
  for (const auto& suite : suites()) {
    SuiteResult r{suite.name, 0, trials};
    for (int t = 0; t < trials; ++t) {
      bool ok = false;
      try {
        ok = suite.check(rng);
      } catch (const std::exception&) {
        ok = false;
      }
      if (ok) ++r.passed;
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_verify_report(std::uint64_t seed, int trials, const std::vector<SuiteResult>& results) {
  std::string out = "verify seed=" + std::to_string(seed) + " trials=" + std::to_string(trials) + "\n";
  bool all = true;
  char line[128];
  for (const auto& r : results) {
    const bool ok = r.passed == r.total;
    all = all && ok;
    std::snprintf(line, sizeof line, "%-32s %6d/%-6d %s\n", r.name.c_str(), r.passed, r.total, ok ? "PASS" : "FAIL");
    out += line;
  }
  out += all ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

}  // namespace qclone::cli
