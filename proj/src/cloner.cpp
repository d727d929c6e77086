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

#include "qclone/cloner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qclone {

namespace {

constexpr double kDegenerate = 1e-12;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Phase of C2 (or C4) given its arccos argument. Degenerate cases are
// signalled by a non-positive denominator and yield zero.
double branch_phase(double numerator, double denominator, Branch sign, double& cos_arg) {
  if (denominator <= 0.0) {
    cos_arg = 1.0;
    return 0.0;
  }
  cos_arg = numerator / std::sqrt(denominator);
  if (cos_arg > 1.0 + kArccosSlack) {
    throw InfeasibleScaling("arccos argument " + fmt(cos_arg) + " exceeds 1");
  }
  const double theta = std::acos(std::clamp(cos_arg, -1.0, 1.0));
  // + 0.0 folds -0 into 0
  return (sign == Branch::kMinus ? -theta : theta) + 0.0;
}

Eigen::Matrix2cd scaled_form(const DensityMatrix& ideal, double s) {
  return s * ideal.entries() + (1.0 - s) / 2.0 * Eigen::Matrix2cd::Identity();
}

double estimate_scaling(const BlochVector& in, const BlochVector& out) {
  const double n2 = in.norm_squared();
  if (n2 <= 1e-18) {
    throw std::invalid_argument("scaling is undefined for a maximally mixed input");
  }
  return out.dot(in) / n2;
}

double anisotropy(const BlochVector& in, const BlochVector& out, double s) {
  return std::max({std::abs(out.mx - s * in.mx), std::abs(out.my - s * in.my), std::abs(out.mz - s * in.mz)});
}

}  // namespace

ScalingPair feasibility(double s0, double s1) {
  if (!std::isfinite(s0) || !std::isfinite(s1)) {
    throw std::invalid_argument("scaling factors must be finite");
  }
  ScalingPair p;
  p.s0 = s0;
  p.s1 = s1;
  p.margin = s0 * s0 + s1 * s1 + s0 * s1 - s0 - s1;
  if (s0 < 0.0 || s0 > 1.0 || s1 < 0.0 || s1 > 1.0) {
    p.feasible = false;
    p.reason = "scaling factors must lie in [0, 1]";
  } else if (p.margin > kFeasibilityTol) {
    p.feasible = false;
    p.reason = "outside the feasible region (margin " + fmt(p.margin) + " > 0)";
  } else {
    p.feasible = true;
  }
  return p;
}

std::array<complex_t, 4> PrepState::amplitudes() const {
  return {std::polar(c1, theta1), std::polar(c2, theta2), complex_t(0.0, 0.0), std::polar(c4, theta4)};
}

StateVector PrepState::state() const {
  const auto a = amplitudes();
  Eigen::Vector4cd v;
  v << a[0], a[1], a[2], a[3];
  return StateVector::normalized(v, Labels{kCopy, kAncilla});
}

PrepState solve_prep(const ScalingPair& target, BranchChoice branch) {
  if (!target.feasible) {
    throw InfeasibleScaling("infeasible scaling pair (" + fmt(target.s0) + ", " + fmt(target.s1) +
                            "): " + target.reason);
  }
  const double s0 = target.s0;
  const double s1 = target.s1;
  const double sum = s0 + s1;

  PrepState p;
  p.branch = branch;
  p.c1 = std::sqrt(std::max(0.0, sum / 2.0));
  p.c2 = std::sqrt(std::max(0.0, (1.0 - s0) / 2.0));
  p.c4 = std::sqrt(std::max(0.0, (1.0 - s1) / 2.0));

  // A vanishing amplitude leaves its phase free; pin it to zero.
  const bool no_c1 = sum < kDegenerate;
  const double den2 = (no_c1 || 1.0 - s0 < kDegenerate) ? 0.0 : sum * (1.0 - s0);
  const double den4 = (no_c1 || 1.0 - s1 < kDegenerate) ? 0.0 : sum * (1.0 - s1);
  p.theta2 = branch_phase(s1, den2, branch.theta2, p.cos_arg2);
  p.theta4 = branch_phase(s0, den4, branch.theta4, p.cos_arg4);
  return p;
}

PrepState solve_prep(const ScalingPair& target) {
  const auto probes = probe_states();
  for (const BranchChoice& branch : kBranchOrder) {
    const PrepState prep = solve_prep(target, branch);
    const StateVector ancilla = prep.state();
    const bool ok = std::all_of(probes.begin(), probes.end(), [&](const StateVector& probe) {
      const CloneOutput out = run_cloner(probe, ancilla);
      return out.residual0 < kBranchTol && out.residual1 < kBranchTol &&
             std::abs(out.s0_est - target.s0) < kBranchTol && std::abs(out.s1_est - target.s1) < kBranchTol;
    });
    if (ok) return prep;
  }
  throw std::runtime_error("no phase branch reproduces scaling (" + fmt(target.s0) + ", " + fmt(target.s1) + ")");
}

std::array<StateVector, 6> probe_states(const Label& label) {
  const double r = 1.0 / std::sqrt(2.0);
  const complex_t i(0.0, 1.0);
  auto make = [&](complex_t a, complex_t b) {
    Eigen::Vector2cd v;
    v << a, b;
    return StateVector::normalized(v, Labels{label});
  };
  return {make(1.0, 0.0), make(0.0, 1.0), make(r, r), make(r, -r), make(r, i * r), make(r, -i * r)};
}

std::vector<GateApplication> cloning_network() {
  return {
      GateApplication::cnot(kOriginal, kCopy),
      GateApplication::cnot(kOriginal, kAncilla),
      GateApplication::cnot(kCopy, kOriginal),
      GateApplication::cnot(kAncilla, kOriginal),
  };
}

StateVector apply_cloning_network(const StateVector& joint) { return simulate(joint, cloning_network()); }

StateVector preserving_prep() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v(r, 0.0, 0.0, r);
  return StateVector::normalized(v, Labels{kCopy, kAncilla});
}

StateVector swapping_prep() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v(r, r, 0.0, 0.0);
  return StateVector::normalized(v, Labels{kCopy, kAncilla});
}

StateVector symmetric_prep() {
  const double a = std::sqrt(2.0 / 3.0);
  const double b = 1.0 / std::sqrt(6.0);
  Eigen::Vector4cd v(a, b, 0.0, b);
  return StateVector::normalized(v, Labels{kCopy, kAncilla});
}

CloneOutput run_cloner(const StateVector& input, const StateVector& prep) {
  if (input.n_qubits() != 1) throw std::invalid_argument("cloner input must be a single qubit");
  if (prep.n_qubits() != 2) throw std::invalid_argument("cloner preparation must be a two-qubit state");

  const StateVector in = input.relabeled({kOriginal});
  const StateVector joint = apply_cloning_network(tensor(in, prep.relabeled({kCopy, kAncilla})));
  const DensityMatrix full = to_density(joint);
  const DensityMatrix ideal = to_density(in);

  CloneOutput out{joint, partial_trace(full, {kOriginal}), partial_trace(full, {kCopy}), {}, {}, {}};
  out.m_in = bloch_vector(ideal);
  out.m_out0 = bloch_vector(out.rho_a0);
  out.m_out1 = bloch_vector(out.rho_a1);
  out.s0_est = estimate_scaling(out.m_in, out.m_out0);
  out.s1_est = estimate_scaling(out.m_in, out.m_out1);
  out.residual0 = max_abs_diff(out.rho_a0.entries(), scaled_form(ideal, out.s0_est));
  out.residual1 = max_abs_diff(out.rho_a1.entries(), scaled_form(ideal, out.s1_est));
  out.fidelity0 = fidelity_pure(in, out.rho_a0);
  out.fidelity1 = fidelity_pure(in, out.rho_a1);
  return out;
}

CloneOutput run_cloner(const StateVector& input, const PrepState& prep) { return run_cloner(input, prep.state()); }

ScalingReport verify_scaling(const CloneOutput& out, double tol) {
  ScalingReport r;
  r.residual0 = out.residual0;
  r.residual1 = out.residual1;
  r.anisotropy0 = anisotropy(out.m_in, out.m_out0, out.s0_est);
  r.anisotropy1 = anisotropy(out.m_in, out.m_out1, out.s1_est);
  r.passed = r.residual0 <= tol && r.residual1 <= tol && r.anisotropy0 <= tol && r.anisotropy1 <= tol;
  return r;
}

}  // namespace qclone
