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

// Asymmetric 1 -> 2 qubit cloner.
//
// The original qubit a0 is coupled to a two-qubit ancilla (a1, b1) by four
// CNOTs: first a0->a1, then a0->b1, then a1->a0, then b1->a0. The ancilla's
// initial state fixes how much of the input survives on each output:
//
//   rho_out(a_j) = s_j |psi><psi| + (1 - s_j)/2 * 1,   j = 0, 1.
//
// Valid scaling pairs fill the region s0^2 + s1^2 + s0*s1 - s0 - s1 <= 0.

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qclone/gates.hpp"
#include "qclone/qstate.hpp"

namespace qclone {

inline const Label kOriginal = "a0";
inline const Label kCopy = "a1";
inline const Label kAncilla = "b1";

/// Pairs with margin above this are infeasible.
inline constexpr double kFeasibilityTol = 1e-12;
/// Slack on arccos arguments before a solve is rejected.
inline constexpr double kArccosSlack = 1e-10;
/// Residual bound used when picking a phase branch.
inline constexpr double kBranchTol = 1e-8;

class InfeasibleScaling : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ScalingPair {
  double s0 = 0.0;
  double s1 = 0.0;
  bool feasible = false;
  double margin = 0.0;  // s0^2 + s1^2 + s0*s1 - s0 - s1
  std::string reason;   // empty when feasible
};

/// Throws std::invalid_argument on non-finite input. Pairs outside [0,1]^2
/// come back infeasible with a range reason.
ScalingPair feasibility(double s0, double s1);

enum class Branch { kMinus, kPlus };

/// Sign choice for theta2 and theta4; each is -/+ arccos(...).
struct BranchChoice {
  Branch theta2 = Branch::kMinus;
  Branch theta4 = Branch::kMinus;
  bool operator==(const BranchChoice&) const = default;
};

/// Order in which solve_prep tries branches. (minus, minus) first.
inline constexpr std::array<BranchChoice, 4> kBranchOrder = {{
    {Branch::kMinus, Branch::kMinus},
    {Branch::kMinus, Branch::kPlus},
    {Branch::kPlus, Branch::kMinus},
    {Branch::kPlus, Branch::kPlus},
}};

/// Ancilla preparation C1|00> + C2|01> + C4|11> with C_j = c_j e^{i theta_j}.
/// C3 is always zero and theta1 is fixed at zero.
struct PrepState {
  double c1 = 1.0;
  double c2 = 0.0;
  double c4 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta4 = 0.0;
  BranchChoice branch;
  // arccos arguments before clamping; 1 when the phase is degenerate.
  double cos_arg2 = 1.0;
  double cos_arg4 = 1.0;

  std::array<complex_t, 4> amplitudes() const;
  StateVector state() const;  // over (a1, b1)
};

/// Moduli and phases for a fixed branch. Throws InfeasibleScaling for an
/// infeasible pair or an arccos argument past 1 + kArccosSlack.
PrepState solve_prep(const ScalingPair& target, BranchChoice branch);

/// Tries kBranchOrder and returns the first branch whose cloner hits the
/// target on every probe state. Throws InfeasibleScaling like the overload
/// above, and std::runtime_error if no branch passes.
PrepState solve_prep(const ScalingPair& target);

/// |0>, |1>, |+>, |->, |+i>, |-i>.
std::array<StateVector, 6> probe_states(const Label& label = kOriginal);

/// The four CNOTs in application order.
std::vector<GateApplication> cloning_network();

/// Runs cloning_network() on any register containing a0, a1 and b1.
StateVector apply_cloning_network(const StateVector& joint);

// Ancilla states for the three textbook settings, over (a1, b1).
StateVector preserving_prep();  // (|00> + |11>)/sqrt2: s0 = 1, s1 = 0
StateVector swapping_prep();    // |0>(|0> + |1>)/sqrt2: s0 = 0, s1 = 1
StateVector symmetric_prep();   // sqrt(2/3)|00> + (|01> + |11>)/sqrt6: s = 2/3

struct CloneOutput {
  StateVector joint;  // over (a0, a1, b1)
  DensityMatrix rho_a0;
  DensityMatrix rho_a1;
  BlochVector m_in;
  BlochVector m_out0;
  BlochVector m_out1;
  double s0_est = 0.0;
  double s1_est = 0.0;
  double residual0 = 0.0;
  double residual1 = 0.0;
  double fidelity0 = 0.0;
  double fidelity1 = 0.0;
};

/// `input` is any one-qubit pure state; it is renamed a0. `prep` may carry
/// any two labels; they are renamed (a1, b1) in order.
CloneOutput run_cloner(const StateVector& input, const StateVector& prep);
CloneOutput run_cloner(const StateVector& input, const PrepState& prep);

struct ScalingReport {
  bool passed = false;
  double residual0 = 0.0;
  double residual1 = 0.0;
  // max_k |m_out_k - s_est * m_in_k| per clone
  double anisotropy0 = 0.0;
  double anisotropy1 = 0.0;

  explicit operator bool() const { return passed; }
};

ScalingReport verify_scaling(const CloneOutput& out, double tol);

}  // namespace qclone
