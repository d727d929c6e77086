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

#include <cmath>

#include "qclone/qstate.hpp"
#include "support/oracle.hpp"

namespace testing {

inline oracle::Vec to_vec(const qclone::StateVector& s) {
  return oracle::Vec(s.amplitudes().data(), s.amplitudes().data() + s.amplitudes().size());
}

inline oracle::Mat to_mat(const Eigen::MatrixXcd& m) {
  oracle::Mat out = oracle::zeros(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return out;
}

inline qclone::StateVector from_vec(const oracle::Vec& v, qclone::Labels labels) {
  Eigen::VectorXcd e(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) e(static_cast<Eigen::Index>(i)) = v[i];
  return qclone::StateVector::normalized(std::move(e), std::move(labels));
}

inline double max_diff(const qclone::StateVector& a, const qclone::StateVector& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

/// Max deviation after removing the global phase that best aligns b onto a.
inline double max_diff_up_to_phase(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const std::complex<double> ov = b.dot(a);
  const std::complex<double> phase = std::abs(ov) > 0 ? ov / std::abs(ov) : 1.0;
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace testing
