// Copyright 2026 The Scramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "scramble/tensor.hpp"

namespace scramble {

using Rng = std::mt19937_64;

/// Mixes a base seed with a stream index so that independent work items
/// (grid cells, restarts) draw from decorrelated generators.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Normalized vector of i.i.d. standard complex Gaussians (Haar-distributed).
Vector haar_vector(std::size_t dim, Rng& rng);
Ket haar_ket(const SubsystemLayout& layout, Rng& rng);

/// Haar-random unitary: Gram-Schmidt on a complex Ginibre matrix.
Matrix haar_unitary(std::size_t dim, Rng& rng);

/// Mixed state G G^dagger / tr(G G^dagger) with a Ginibre G (Hilbert-Schmidt measure).
DensityMatrix random_density_matrix(const SubsystemLayout& layout, Rng& rng);

}  // namespace scramble
