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

#include "qclone/random.hpp"

#include <cmath>

namespace qclone {

namespace {

complex_t gaussian_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

}  // namespace

StateVector random_state(Rng& rng, const Labels& labels) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(std::size_t{1} << labels.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = gaussian_complex(rng);
  return StateVector::normalized(std::move(v), labels);
}

std::array<complex_t, 4> random_amplitudes4(Rng& rng) {
  std::array<complex_t, 4> c;
  double n2 = 0.0;
  for (auto& x : c) {
    x = gaussian_complex(rng);
    n2 += std::norm(x);
  }
  const double n = std::sqrt(n2);
  for (auto& x : c) x /= n;
  return c;
}

BlochVector random_bloch(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    BlochVector m{u(rng), u(rng), u(rng)};
    if (m.norm_squared() <= 1.0) return m;
  }
}

ScalingPair random_feasible_pair(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const double s0 = u(rng);
    const double s1 = u(rng);
    ScalingPair p = feasibility(s0, s1);
    if (p.feasible) return p;
  }
}

}  // namespace qclone
