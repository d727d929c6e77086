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

#include "qclone/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <Eigen/Eigenvalues>

namespace qclone {

namespace {

void check_labels(const Labels& labels) {
  if (labels.empty() || labels.size() > kMaxQubits) {
    throw std::invalid_argument("register must hold between 1 and 4 qubits, got " +
                                std::to_string(labels.size()));
  }
  std::unordered_set<Label> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw std::invalid_argument("empty qubit label");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate qubit label '" + l + "'");
  }
}

std::size_t find_label(const Labels& labels, const Label& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument("unknown qubit label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

// Bit mask of the qubit at register position `pos` in an n-qubit index.
std::size_t bit_of(std::size_t n, std::size_t pos) { return std::size_t{1} << (n - 1 - pos); }

}  // namespace

StateVector::StateVector(Eigen::VectorXcd amplitudes, Labels labels)
    : amplitudes_(std::move(amplitudes)), labels_(std::move(labels)) {
  check_labels(labels_);
  if (static_cast<std::size_t>(amplitudes_.size()) != (std::size_t{1} << labels_.size())) {
    throw std::invalid_argument("amplitude count does not match 2^n_qubits");
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kStructuralTol) {
    throw std::invalid_argument("state is not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
  }
}

StateVector StateVector::normalized(Eigen::VectorXcd amplitudes, Labels labels) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw std::invalid_argument("cannot normalize a zero vector");
  amplitudes /= norm;
  return StateVector(std::move(amplitudes), std::move(labels));
}

StateVector StateVector::basis(std::span<const int> bits, Labels labels) {
  if (bits.size() != labels.size()) throw std::invalid_argument("bit count does not match label count");
  const std::size_t n = labels.size();
  if (n == 0 || n > kMaxQubits) throw std::invalid_argument("register must hold between 1 and 4 qubits");
  std::size_t index = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (bits[k] != 0 && bits[k] != 1) throw std::invalid_argument("basis bits must be 0 or 1");
    if (bits[k] == 1) index |= bit_of(n, k);
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(amps), std::move(labels));
}

StateVector StateVector::basis(std::initializer_list<int> bits, Labels labels) {
  return basis(std::span<const int>(bits.begin(), bits.size()), std::move(labels));
}

std::size_t StateVector::position(const Label& label) const { return find_label(labels_, label); }

bool StateVector::has(const Label& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

StateVector StateVector::relabeled(Labels labels) const {
  if (labels.size() != labels_.size()) throw std::invalid_argument("relabel must keep the qubit count");
  return StateVector(amplitudes_, std::move(labels));
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries, Labels labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
  check_labels(labels_);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << labels_.size());
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw std::invalid_argument("density matrix dimension does not match 2^n_qubits");
  }
  if (max_abs_diff(entries_, entries_.adjoint()) > kStructuralTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - complex_t(1.0)) > kStructuralTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(entries_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < kEigenTol) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  Labels labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  if (labels.size() > kMaxQubits) {
    throw std::invalid_argument("register overflow: tensor product exceeds 4 qubits");
  }
  for (const auto& l : b.labels()) {
    if (a.has(l)) throw std::invalid_argument("label collision on '" + l + "'");
  }
  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  Eigen::VectorXcd amps(da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    amps.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  }
  // The product norm drifts from 1 by rounding only.
  return StateVector::normalized(std::move(amps), std::move(labels));
}

DensityMatrix to_density(const StateVector& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint(), psi.labels());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Labels& keep) {
  if (keep.empty()) throw std::invalid_argument("partial trace needs a nonempty keep set");
  const Labels& labels = rho.labels();
  const std::size_t n = labels.size();

  std::vector<bool> kept(n, false);
  for (const auto& l : keep) kept[find_label(labels, l)] = true;

  std::vector<std::size_t> keep_pos;
  std::vector<std::size_t> trace_pos;
  Labels out_labels;
  for (std::size_t k = 0; k < n; ++k) {
    if (kept[k]) {
      keep_pos.push_back(k);
      out_labels.push_back(labels[k]);
    } else {
      trace_pos.push_back(k);
    }
  }

  // Scatter a compact index over `positions` back into full-register bits.
  auto scatter = [n](std::size_t compact, const std::vector<std::size_t>& positions) {
    std::size_t full = 0;
    const std::size_t m = positions.size();
    for (std::size_t j = 0; j < m; ++j) {
      if (compact & (std::size_t{1} << (m - 1 - j))) full |= bit_of(n, positions[j]);
    }
    return full;
  };

  const std::size_t dk = std::size_t{1} << keep_pos.size();
  const std::size_t dt = std::size_t{1} << trace_pos.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (std::size_t i = 0; i < dk; ++i) {
    const std::size_t fi = scatter(i, keep_pos);
    for (std::size_t j = 0; j < dk; ++j) {
      const std::size_t fj = scatter(j, keep_pos);
      complex_t sum = 0.0;
      for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t ft = scatter(t, trace_pos);
        sum += rho(fi | ft, fj | ft);
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sum;
    }
  }
  return DensityMatrix(std::move(out), std::move(out_labels));
}

StateVector reorder(const StateVector& psi, const Labels& order) {
  const std::size_t n = psi.n_qubits();
  if (order.size() != n) throw std::invalid_argument("reorder needs a permutation of the register labels");
  std::vector<std::size_t> src(n);  // src[k]: old position of the qubit now at position k
  for (std::size_t k = 0; k < n; ++k) src[k] = psi.position(order[k]);
  check_labels(order);

  Eigen::VectorXcd amps(static_cast<Eigen::Index>(psi.dim()));
  for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
    std::size_t old = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (idx & bit_of(n, k)) old |= bit_of(n, src[k]);
    }
    amps(static_cast<Eigen::Index>(idx)) = psi[old];
  }
  return StateVector(std::move(amps), order);
}

double fidelity_pure(const StateVector& psi, const DensityMatrix& rho) {
  if (psi.n_qubits() != 1 || rho.n_qubits() != 1) {
    throw std::invalid_argument("fidelity_pure expects one-qubit arguments");
  }
  const complex_t f = psi.amplitudes().dot(rho.entries() * psi.amplitudes());
  return std::clamp(f.real(), 0.0, 1.0);
}

BlochVector bloch_vector(const DensityMatrix& rho) {
  if (rho.n_qubits() != 1) throw std::invalid_argument("Bloch vector is defined for one qubit");
  const complex_t r10 = rho(1, 0);
  return {2.0 * r10.real(), 2.0 * r10.imag(), rho(0, 0).real() - rho(1, 1).real()};
}

DensityMatrix from_bloch(const BlochVector& m, Label label) {
  if (m.norm_squared() > 1.0 + 1e-10) throw std::invalid_argument("Bloch vector longer than 1");
  Eigen::Matrix2cd rho;
  rho << complex_t(1.0 + m.mz, 0.0), complex_t(m.mx, -m.my),
         complex_t(m.mx, m.my), complex_t(1.0 - m.mz, 0.0);
  return DensityMatrix(rho / 2.0, Labels{std::move(label)});
}

double overlap_modulus(const StateVector& a, const StateVector& b) {
  if (a.labels() != b.labels()) throw std::invalid_argument("overlap needs matching registers");
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qclone
