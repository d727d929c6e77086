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
#include <utility>

#include "qclone/qstate.hpp"

namespace qclone {

inline const Label kReference = "r";

/// Fixed Bell order used everywhere: Phi+, Phi-, Psi+, Psi-.
enum class Bell { kPhiPlus = 0, kPhiMinus = 1, kPsiPlus = 2, kPsiMinus = 3 };

/// Weights X1..X4 of a two-qubit state over the Bell basis.
class BellCoefficients {
 public:
  /// Throws std::invalid_argument unless sum |x_i|^2 = 1 within 1e-10.
  explicit BellCoefficients(std::array<complex_t, 4> x);

  /// Basis change from C1|00> + C2|01> + C3|10> + C4|11>.
  static BellCoefficients from_computational(const std::array<complex_t, 4>& c);

  /// Unit vector on one Bell state.
  static BellCoefficients unit(Bell b);

  const std::array<complex_t, 4>& values() const { return x_; }
  complex_t operator[](std::size_t i) const { return x_[i]; }

 private:
  std::array<complex_t, 4> x_;
};

/// Phi+, Phi-, Psi+, Psi- over (first, second).
std::array<StateVector, 4> bell_basis(const Label& first = "q0", const Label& second = "q1");

/// sum_j X_j |B_j> over (first, second).
StateVector bell_superposition(const BellCoefficients& x, const Label& first = "a1", const Label& second = "b1");

/// |Phi+>_{r a0} (x) prep_{a1 b1} pushed through the four-CNOT cloning
/// network. Output register is (r, a0, a1, b1).
StateVector run_pauli_cloner(const BellCoefficients& prep);

struct BellPairing {
  std::pair<Label, Label> left{kReference, "a0"};
  std::pair<Label, Label> right{"a1", "b1"};
};

/// coefficient(j, k) = <B_j(left) (x) B_k(right) | state>.
/// Throws std::invalid_argument unless the state has exactly the four
/// qubits named by the pairing.
Eigen::Matrix4cd bell_decompose(const StateVector& state, const BellPairing& pairing = {});

/// Largest |coefficient(j, k)| with j != k.
double max_off_diagonal(const Eigen::Matrix4cd& m);

}  // namespace qclone
