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

#include "qclone/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qclone/cloner.hpp"

namespace qclone {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

BellCoefficients::BellCoefficients(std::array<complex_t, 4> x) : x_(x) {
  double n2 = 0.0;
  for (const auto& v : x_) n2 += std::norm(v);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-10) {
    throw std::invalid_argument("Bell coefficients are not normalized");
  }
}

BellCoefficients BellCoefficients::from_computational(const std::array<complex_t, 4>& c) {
  return BellCoefficients({(c[0] + c[3]) * kInvSqrt2, (c[0] - c[3]) * kInvSqrt2, (c[1] + c[2]) * kInvSqrt2,
                           (c[1] - c[2]) * kInvSqrt2});
}

BellCoefficients BellCoefficients::unit(Bell b) {
  std::array<complex_t, 4> x{};
  x[static_cast<std::size_t>(b)] = 1.0;
  return BellCoefficients(x);
}

std::array<StateVector, 4> bell_basis(const Label& first, const Label& second) {
  const double r = kInvSqrt2;
  const Labels l{first, second};
  return {
      StateVector::normalized(Eigen::Vector4cd(r, 0.0, 0.0, r), l),
      StateVector::normalized(Eigen::Vector4cd(r, 0.0, 0.0, -r), l),
      StateVector::normalized(Eigen::Vector4cd(0.0, r, r, 0.0), l),
      StateVector::normalized(Eigen::Vector4cd(0.0, r, -r, 0.0), l),
  };
}

StateVector bell_superposition(const BellCoefficients& x, const Label& first, const Label& second) {
  const auto basis = bell_basis(first, second);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  for (std::size_t j = 0; j < 4; ++j) v += x[j] * basis[j].amplitudes();
  return StateVector::normalized(v, Labels{first, second});
}

StateVector run_pauli_cloner(const BellCoefficients& prep) {
  const StateVector input = bell_basis(kReference, kOriginal)[0];
  return apply_cloning_network(tensor(input, bell_superposition(prep, kCopy, kAncilla)));
}

Eigen::Matrix4cd bell_decompose(const StateVector& state, const BellPairing& pairing) {
  if (state.n_qubits() != 4) throw std::invalid_argument("Bell decomposition needs a four-qubit register");
  const Labels order{pairing.left.first, pairing.left.second, pairing.right.first, pairing.right.second};
  // Throws on a label the state does not carry.
  const StateVector aligned = reorder(state, order);

  const auto left = bell_basis(order[0], order[1]);
  const auto right = bell_basis(order[2], order[3]);
  Eigen::Matrix4cd m;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      const StateVector product = tensor(left[j], right[k]);
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          product.amplitudes().dot(aligned.amplitudes());
    }
  }
  return m;
}

double max_off_diagonal(const Eigen::Matrix4cd& m) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < 4; ++j) {
    for (Eigen::Index k = 0; k < 4; ++k) {
      if (j != k) worst = std::max(worst, std::abs(m(j, k)));
    }
  }
  return worst;
}

}  // namespace qclone
