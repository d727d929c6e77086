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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qclone/cloner.hpp"
#include "qclone/pauli.hpp"
#include "qclone/random.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace qclone;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

BellCoefficients random_coefficients(Rng& rng) { return BellCoefficients(random_amplitudes4(rng)); }

}  // namespace

TEST_SUITE("pauli") {

TEST_CASE("Bell basis vectors") {
  const auto b = bell_basis("a", "b");
  CHECK(b[0].amplitudes() == Eigen::Vector4cd(kR, 0, 0, kR));
  CHECK(b[1].amplitudes() == Eigen::Vector4cd(kR, 0, 0, -kR));
  CHECK(b[2].amplitudes() == Eigen::Vector4cd(0, kR, kR, 0));
  CHECK(b[3].amplitudes() == Eigen::Vector4cd(0, kR, -kR, 0));
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      const complex_t g = b[j].amplitudes().dot(b[k].amplitudes());
      CHECK(std::abs(g - (j == k ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("Bell coefficients must be normalized") {
  CHECK_THROWS_AS(BellCoefficients({1.0, 1.0, 0.0, 0.0}), std::invalid_argument);
  CHECK_NOTHROW(BellCoefficients({0.5, 0.5, 0.5, complex_t(0.0, 0.5)}));
}

TEST_CASE("unit preparations map to matched Bell products") {
  for (int j = 0; j < 4; ++j) {
    const auto out = run_pauli_cloner(BellCoefficients::unit(static_cast<Bell>(j)));
    CHECK(out.labels() == Labels{"r", "a0", "a1", "b1"});
    const auto expect = tensor(bell_basis("r", "a0")[static_cast<std::size_t>(j)],
                               bell_basis("a1", "b1")[static_cast<std::size_t>(j)]);
    CHECK(testing::max_diff(out, expect) < 1e-12);
  }
}

TEST_CASE("uniform preparation gives the uniform Bell-diagonal sum") {
  const auto out = run_pauli_cloner(BellCoefficients({0.5, 0.5, 0.5, 0.5}));
  const auto m = bell_decompose(out);
  for (Eigen::Index j = 0; j < 4; ++j) CHECK(std::abs(m(j, j) - 0.5) < 1e-12);
  CHECK(max_off_diagonal(m) < 1e-10);

  // Independent check via oracle kron: (1/2) sum_j |B_j>|B_j>.
  oracle::Vec expect(16, 0.0);
  const auto b = bell_basis("x", "y");
  for (std::size_t j = 0; j < 4; ++j) {
    const auto term = oracle::kron(testing::to_vec(b[j]), testing::to_vec(b[j]));
    for (std::size_t i = 0; i < 16; ++i) expect[i] += 0.5 * term[i];
  }
  CHECK(oracle::max_diff(testing::to_vec(out), expect) < 1e-12);
}

TEST_CASE("bell_decompose examples") {
  const auto phi = bell_basis("r", "a0")[0];
  const auto m = bell_decompose(tensor(phi, bell_basis("a1", "b1")[0]));
  CHECK(std::abs(m(0, 0) - 1.0) < 1e-12);
  CHECK(m.cwiseAbs().sum() == doctest::Approx(1.0));

  CHECK_THROWS_AS(bell_decompose(StateVector::basis({0, 0, 0}, {"r", "a0", "a1"})), std::invalid_argument);
  CHECK_THROWS_AS(bell_decompose(StateVector::basis({0, 0, 0, 0}, {"w", "x", "y", "z"})), std::invalid_argument);
}

TEST_CASE("bell_decompose honours the pairing") {
  // |Psi->_{x z} |Phi->_{y w} held in register order (w, x, y, z).
  const auto s = tensor(bell_basis("x", "z")[3], bell_basis("y", "w")[1]);
  const auto shuffled = reorder(s, {"w", "x", "y", "z"});
  const auto m = bell_decompose(shuffled, BellPairing{{"x", "z"}, {"y", "w"}});
  CHECK(std::abs(m(3, 1) - 1.0) < 1e-12);
  CHECK(std::abs(m.cwiseAbs2().sum() - 1.0) < 1e-12);
}

TEST_CASE("property: Bell coefficients reproduce a random state") {
  Rng rng(31);
  const auto left = bell_basis("r", "a0");
  const auto right = bell_basis("a1", "b1");
  for (int trial = 0; trial < 100; ++trial) {
    const auto psi = random_state(rng, {"r", "a0", "a1", "b1"});
    const auto m = bell_decompose(psi);
    REQUIRE(std::abs(m.cwiseAbs2().sum() - 1.0) < 1e-10);
    Eigen::VectorXcd rebuilt = Eigen::VectorXcd::Zero(16);
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        rebuilt += m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) *
                   tensor(left[j], right[k]).amplitudes();
    REQUIRE((rebuilt - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("property: the network output is Bell-diagonal with diagonal X") {
  Rng rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_coefficients(rng);
    const auto m = bell_decompose(run_pauli_cloner(x));
    REQUIRE(max_off_diagonal(m) < 1e-10);
    Eigen::Vector4cd diag = m.diagonal();
    Eigen::Vector4cd want(x[0], x[1], x[2], x[3]);
    REQUIRE(testing::max_diff_up_to_phase(diag, want) < 1e-10);
  }
}

TEST_CASE("computational and Bell expansions describe the same ancilla") {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_amplitudes4(rng);
    const auto via_bell = bell_superposition(BellCoefficients::from_computational(c));
    const Eigen::Vector4cd direct(c[0], c[1], c[2], c[3]);
    REQUIRE((via_bell.amplitudes() - direct).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("property: both modules run the same network") {
  Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const auto prep = solve_prep(random_feasible_pair(rng));
    const auto x = BellCoefficients::from_computational(prep.amplitudes());
    const auto pauli_out = run_pauli_cloner(x);
    const auto joint_in = tensor(bell_basis(kReference, kOriginal)[0], prep.state());
    const auto cloner_out = apply_cloning_network(joint_in);
    REQUIRE(testing::max_diff(pauli_out, cloner_out) < 1e-12);
  }
}

TEST_CASE("purified input: the reduced original follows the scaled form") {
  // With |Phi+>_{r a0} the input is maximally mixed; the reduced a0 output
  // must stay 1/2 for every feasible preparation.
  Rng rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const auto prep = solve_prep(random_feasible_pair(rng));
    const auto out = run_pauli_cloner(BellCoefficients::from_computational(prep.amplitudes()));
    const auto rho = partial_trace(to_density(out), {kOriginal});
    REQUIRE(max_abs_diff(rho.entries(), Eigen::Matrix2cd::Identity() / 2.0) < 1e-12);
  }
}

}  // TEST_SUITE
