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

// Seeded samplers for property checks. All draws go through Rng so a fixed
// seed reproduces a run exactly.

#pragma once

#include <array>
#include <random>

#include "qclone/cloner.hpp"
#include "qclone/qstate.hpp"

namespace qclone {

using Rng = std::mt19937_64;

/// Haar-random pure state (normalized complex Gaussian vector).
StateVector random_state(Rng& rng, const Labels& labels);

/// Four complex amplitudes with unit total weight.
std::array<complex_t, 4> random_amplitudes4(Rng& rng);

/// Point drawn uniformly from the Bloch ball.
BlochVector random_bloch(Rng& rng);

/// Uniform over the feasible part of the unit square (rejection sampling).
ScalingPair random_feasible_pair(Rng& rng);

}  // namespace qclone
