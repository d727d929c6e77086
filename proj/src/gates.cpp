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

#include "qclone/gates.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

#include <Eigen/SVD>

namespace qclone {

namespace {

constexpr double kPi = std::numbers::pi;
// Rotation angles below this (mod 2pi) are dropped from emitted circuits.
constexpr double kAngleEps = 1e-12;

std::size_t mask_for(const StateVector& s, const Label& label) {
  return std::size_t{1} << (s.n_qubits() - 1 - s.position(label));
}

// Applies a 2x2 matrix to `target` by walking index pairs (i, i | bit).
StateVector apply_single(const StateVector& state, const Eigen::Matrix2cd& m, const Label& target) {
  const std::size_t bit = mask_for(state, target);
  Eigen::VectorXcd out = state.amplitudes();
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (i & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | bit);
    const complex_t a = state.amplitudes()(i0);
    const complex_t b = state.amplitudes()(i1);
    out(i0) = m(0, 0) * a + m(0, 1) * b;
    out(i1) = m(1, 0) * a + m(1, 1) * b;
  }
  return StateVector(std::move(out), state.labels());
}

// Maps an angle into (-pi, pi]; shifting by 2pi only flips the global sign.
double wrap_angle(double t) {
  t = std::remainder(t, 2.0 * kPi);
  if (t <= -kPi) t += 2.0 * kPi;
  return t;
}

struct Zyz {
  double alpha;  // applied last
  double beta;
  double gamma;  // applied first
};

// W = e^{i phi} RZ(alpha) RY(beta) RZ(gamma).
Zyz zyz_decompose(const Eigen::Matrix2cd& w) {
  const Eigen::Matrix2cd su = w / std::sqrt(w.determinant());
  const double c = std::abs(su(0, 0));
  const double s = std::abs(su(1, 0));
  const double beta = 2.0 * std::atan2(s, c);
  const double sum = 2.0 * std::arg(su(1, 1));   // alpha + gamma
  const double diff = 2.0 * std::arg(su(1, 0));  // alpha - gamma
  if (s < kAngleEps) return {sum, beta, 0.0};
  if (c < kAngleEps) return {diff, beta, 0.0};
  return {(sum + diff) / 2.0, beta, (sum - diff) / 2.0};
}

// Drops phase-only and identity rotations; tracks which qubits still hold |0>.
class CircuitBuilder {
 public:
  CircuitBuilder(Label a, Label b) : fresh_{std::move(a), std::move(b)} {}

  void ry(double angle, const Label& q) {
    angle = wrap_angle(angle);
    if (std::abs(angle) < kAngleEps) return;
    if (fresh_.count(q) != 0 && std::abs(angle - kPi / 2.0) < kAngleEps) {
      gates_.push_back(GateApplication::hadamard(q));  // same action on |0>
    } else {
      gates_.push_back(GateApplication::ry(angle, q));
    }
    fresh_.erase(q);
  }

  void rz(double angle, const Label& q) {
    angle = wrap_angle(angle);
    if (std::abs(angle) < kAngleEps) return;
    if (fresh_.count(q) != 0) return;  // global phase on |0>
    gates_.push_back(GateApplication::rz(angle, q));
  }

  void cnot(const Label& c, const Label& t) {
    gates_.push_back(GateApplication::cnot(c, t));
    fresh_.erase(c);
    fresh_.erase(t);
  }

  void zyz(const Eigen::Matrix2cd& w, const Label& q) {
    const Zyz z = zyz_decompose(w);
    rz(z.gamma, q);
    ry(z.beta, q);
    rz(z.alpha, q);
  }

  std::vector<GateApplication> take() { return std::move(gates_); }

 private:
  std::set<Label> fresh_;
  std::vector<GateApplication> gates_;
};

}  // namespace

GateApplication GateApplication::cnot(Label control, Label target) {
  if (control == target) throw std::invalid_argument("CNOT control and target must differ");
  return {GateKind::kCnot, 0.0, std::move(control), std::move(target)};
}

GateApplication GateApplication::hadamard(Label target) {
  return {GateKind::kHadamard, 0.0, std::nullopt, std::move(target)};
}

GateApplication GateApplication::ry(double angle, Label target) {
  return {GateKind::kRy, angle, std::nullopt, std::move(target)};
}

GateApplication GateApplication::rz(double angle, Label target) {
  return {GateKind::kRz, angle, std::nullopt, std::move(target)};
}

std::string GateApplication::to_string() const {
  char buf[64];
  switch (kind) {
    case GateKind::kCnot:
      return "CNOT(" + control.value_or("?") + "->" + target + ")";
    case GateKind::kHadamard:
      return "H(" + target + ")";
    case GateKind::kRy:
      std::snprintf(buf, sizeof buf, "RY(%.12g)", angle);
      return std::string(buf) + "(" + target + ")";
    case GateKind::kRz:
      std::snprintf(buf, sizeof buf, "RZ(%.12g)", angle);
      return std::string(buf) + "(" + target + ")";
  }
  return "?";
}

StateVector apply_cnot(const StateVector& state, const Label& control, const Label& target) {
  if (control == target) throw std::invalid_argument("CNOT control and target must differ");
  const std::size_t cbit = mask_for(state, control);
  const std::size_t tbit = mask_for(state, target);
  Eigen::VectorXcd out = state.amplitudes();
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(out(static_cast<Eigen::Index>(i)), out(static_cast<Eigen::Index>(i | tbit)));
    }
  }
  return StateVector(std::move(out), state.labels());
}

StateVector apply_hadamard(const StateVector& state, const Label& target) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << r, r, r, -r;
  return apply_single(state, h, target);
}

StateVector apply_ry(const StateVector& state, double angle, const Label& target) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return apply_single(state, m, target);
}

StateVector apply_rz(const StateVector& state, double angle, const Label& target) {
  Eigen::Matrix2cd m;
  m << std::polar(1.0, -angle / 2.0), 0.0, 0.0, std::polar(1.0, angle / 2.0);
  return apply_single(state, m, target);
}

StateVector apply(const StateVector& state, const GateApplication& gate) {
  switch (gate.kind) {
    case GateKind::kCnot:
      if (!gate.control) throw std::invalid_argument("CNOT without a control qubit");
      return apply_cnot(state, *gate.control, gate.target);
    case GateKind::kHadamard:
      return apply_hadamard(state, gate.target);
    case GateKind::kRy:
      return apply_ry(state, gate.angle, gate.target);
    case GateKind::kRz:
      return apply_rz(state, gate.angle, gate.target);
  }
  throw std::logic_error("unhandled gate kind");
}

StateVector simulate(const StateVector& initial, const std::vector<GateApplication>& gates) {
  StateVector s = initial;
  for (const auto& g : gates) s = apply(s, g);
  return s;
}

TwoQubitPreparation prepare_two_qubit(const std::array<complex_t, 4>& amplitudes, const Label& first,
                                      const Label& second) {
  double norm2 = 0.0;
  for (const auto& c : amplitudes) norm2 += std::norm(c);
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-10) {
    throw std::invalid_argument("preparation amplitudes are not normalized");
  }

  Eigen::Vector4cd v;
  v << amplitudes[0], amplitudes[1], amplitudes[2], amplitudes[3];
  StateVector target = StateVector::normalized(v, Labels{first, second});

  Eigen::Matrix2cd m;
  m << target[0], target[1], target[2], target[3];
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2cd u = svd.matrixU();
  Eigen::Matrix2cd vbar = svd.matrixV().conjugate();
  const Eigen::Vector2d sigma = svd.singularValues();

  // s0|00> + s1|11> is invariant under D (x) conj(D) for diagonal phases D.
  // Use that freedom to make the dominant entry of each column of U real.
  for (Eigen::Index k = 0; k < 2; ++k) {
    Eigen::Index row = 0;
    u.col(k).cwiseAbs().maxCoeff(&row);
    const complex_t phase = std::polar(1.0, -std::arg(u(row, k)));
    u.col(k) *= phase;
    vbar.col(k) *= std::conj(phase);
  }

  CircuitBuilder circuit(first, second);
  const double schmidt_angle = 2.0 * std::atan2(sigma(1), sigma(0));
  if (std::abs(schmidt_angle) >= kAngleEps) {
    circuit.ry(schmidt_angle, first);
    circuit.cnot(first, second);
  }
  circuit.zyz(u, first);
  circuit.zyz(vbar, second);
  return {std::move(target), circuit.take()};
}

}  // namespace qclone
