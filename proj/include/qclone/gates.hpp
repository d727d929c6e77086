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
#include <optional>
#include <string>
#include <vector>

#include "qclone/qstate.hpp"

namespace qclone {

enum class GateKind { kCnot, kHadamard, kRy, kRz };

/// One gate acting on named qubits. Construct through the factories, which
/// enforce the control/target rules.
struct GateApplication {
  GateKind kind = GateKind::kHadamard;
  double angle = 0.0;  // radians; RY and RZ only
  std::optional<Label> control;
  Label target;

  static GateApplication cnot(Label control, Label target);
  static GateApplication hadamard(Label target);
  static GateApplication ry(double angle, Label target);
  static GateApplication rz(double angle, Label target);

  /// e.g. "CNOT(a1->b1)", "RY(1.23)(b1)".
  std::string to_string() const;

  bool operator==(const GateApplication&) const = default;
};

/// Controlled-NOT: flips `target` on the branches where `control` is 1.
StateVector apply_cnot(const StateVector& state, const Label& control, const Label& target);

StateVector apply_hadamard(const StateVector& state, const Label& target);

/// RY(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
StateVector apply_ry(const StateVector& state, double angle, const Label& target);

/// RZ(t) = diag(exp(-i t/2), exp(i t/2)).
StateVector apply_rz(const StateVector& state, double angle, const Label& target);

StateVector apply(const StateVector& state, const GateApplication& gate);

/// Applies the gates left to right.
StateVector simulate(const StateVector& initial, const std::vector<GateApplication>& gates);

/// A two-qubit target state and a circuit that builds it from |00>.
struct TwoQubitPreparation {
  StateVector target;
  std::vector<GateApplication> gates;
};

/**
 * Circuit for C1|00> + C2|01> + C3|10> + C4|11> over (first, second).
 *
 * The 2x2 amplitude matrix M[i][j] = C_{2i+j} is split by SVD into
 * U diag(s0, s1) V^H, so the state equals (U (x) conj(V)) (s0|00> + s1|11>).
 * The circuit is RY on `first` to set the Schmidt weights, one CNOT, then a
 * ZYZ rotation triple on each qubit. Rotations that are trivial up to a
 * global phase are dropped, the CNOT is dropped for product states, and an
 * RY(pi/2) acting first on a fresh |0> is written as a Hadamard.
 *
 * The rebuilt state matches the target up to global phase only.
 * Throws std::invalid_argument unless sum |C_i|^2 = 1 within 1e-10.
 */
TwoQubitPreparation prepare_two_qubit(const std::array<complex_t, 4>& amplitudes,
                                      const Label& first = "a1", const Label& second = "b1");

}  // namespace qclone
