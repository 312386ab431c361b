// Copyright 2026 The vecq Authors
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

// Seeded random fixtures: Haar unitaries, random states, random channels.
// All generators take the engine explicitly; there is no global state.

#include <random>
#include <vector>

#include "vecq/channels.hpp"
#include "vecq/matrix.hpp"

namespace vecq::random {

using Engine = std::mt19937_64;

/** n x m matrix of i.i.d. standard complex Gaussians. */
ComplexMatrix ginibre(std::size_t n, std::size_t m, Engine& rng);
/** Haar-distributed unitary (QR of a Ginibre matrix with phase correction). */
ComplexMatrix haar_unitary(std::size_t n, Engine& rng);
/** Unit-norm Haar-random state vector. */
std::vector<Complex> pure_state(std::size_t n, Engine& rng);
/** G G^dagger / tr(G G^dagger) for an n x n Ginibre G (full rank almost surely). */
ComplexMatrix density_matrix(std::size_t n, Engine& rng);
/**
 * A random CPTP channel: tr_env(U (rho (x) |0><0|) U^dagger) with a Haar U on
 * the system plus a d^2-dimensional environment.
 */
Superoperator cptp_channel(std::size_t d, Engine& rng);
/** N-outcome POVM S^{-1/2} A_k S^{-1/2} with A_k random PSD and S = sum A_k. */
std::vector<ComplexMatrix> povm(std::size_t d, std::size_t outcomes, Engine& rng);

}  // namespace vecq::random
