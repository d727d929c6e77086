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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qclone {

using complex_t = std::complex<double>;
using Label = std::string;
using Labels = std::vector<Label>;

/// Largest register the library will build. Dense storage only.
inline constexpr std::size_t kMaxQubits = 4;

/// Structural invariants (norm, trace, Hermiticity).
inline constexpr double kStructuralTol = 1e-12;
/// Lower bound accepted for density-matrix eigenvalues.
inline constexpr double kEigenTol = -1e-10;

/**
 * Normalized pure state over a small named register.
 *
 * Basis index bit k, counted from the most-significant end, belongs to
 * labels()[k]. So for labels (a0, a1, b1) the amplitude of |a0 a1 b1> = |100>
 * sits at index 4. Every operation outside this module addresses qubits by
 * label and never relies on positions.
 */
class StateVector {
 public:
  /// Throws std::invalid_argument unless the amplitudes are normalized within
  /// kStructuralTol and the labels are distinct and match the length.
  StateVector(Eigen::VectorXcd amplitudes, Labels labels);

  /// Rescales to unit norm first. Throws on a zero vector.
  static StateVector normalized(Eigen::VectorXcd amplitudes, Labels labels);

  /// Computational basis state; bits[k] is the value of labels[k].
  static StateVector basis(std::span<const int> bits, Labels labels);
  static StateVector basis(std::initializer_list<int> bits, Labels labels);

  std::size_t n_qubits() const { return labels_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  const Labels& labels() const { return labels_; }
  complex_t operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  /// Position of `label` in the register. Throws std::invalid_argument if absent.
  std::size_t position(const Label& label) const;
  bool has(const Label& label) const;

  /// Same amplitudes under new names (same count).
  StateVector relabeled(Labels labels) const;

 private:
  Eigen::VectorXcd amplitudes_;
  Labels labels_;
};

/// Hermitian, unit-trace, positive-semidefinite operator over named qubits.
class DensityMatrix {
 public:
  /// Validates all three invariants; throws std::invalid_argument otherwise.
  DensityMatrix(Eigen::MatrixXcd entries, Labels labels);

  std::size_t n_qubits() const { return labels_.size(); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  const Labels& labels() const { return labels_; }
  complex_t operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

 private:
  Eigen::MatrixXcd entries_;
  Labels labels_;
};

struct BlochVector {
  double mx = 0.0;
  double my = 0.0;
  double mz = 0.0;

  double dot(const BlochVector& o) const { return mx * o.mx + my * o.my + mz * o.mz; }
  double norm_squared() const { return dot(*this); }
};

/// Kronecker product; labels are concatenated as a then b.
StateVector tensor(const StateVector& a, const StateVector& b);

/// |psi><psi|.
DensityMatrix to_density(const StateVector& psi);

/// Reduces rho onto `keep`, in the order those labels appear in rho.
/// Throws std::invalid_argument for an empty keep set or an unknown label.
DensityMatrix partial_trace(const DensityMatrix& rho, const Labels& keep);

/// Moves qubits so that the register reads in `order` (a permutation of the
/// current labels). Amplitudes follow their qubits.
StateVector reorder(const StateVector& psi, const Labels& order);

/// <psi|rho|psi> for a one-qubit psi and rho.
double fidelity_pure(const StateVector& psi, const DensityMatrix& rho);

/// rho = (1 + m.sigma)/2.
BlochVector bloch_vector(const DensityMatrix& rho);
DensityMatrix from_bloch(const BlochVector& m, Label label = "q");

/// |<a|b>|. Registers must carry the same labels in the same order.
double overlap_modulus(const StateVector& a, const StateVector& b);

/// Largest |a_ij - b_ij|.
double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace qclone
