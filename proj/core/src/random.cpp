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

#include "scramble/random.hpp"

#include <cmath>

namespace scramble {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

Matrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = gaussian(rng);
  }
  return g;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined word
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Vector haar_vector(std::size_t dim, Rng& rng) {
  Vector v = ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

Ket haar_ket(const SubsystemLayout& layout, Rng& rng) {
  return Ket(haar_vector(layout.total_dim(), rng), layout);
}

Matrix haar_unitary(std::size_t dim, Rng& rng) {
  Matrix u = ginibre(dim, dim, rng);
  // Modified Gram-Schmidt; the implied R has a positive diagonal, which is
  // what makes the result Haar rather than QR-convention dependent.
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    for (Eigen::Index k = 0; k < j; ++k) {
      const Complex c = u.col(k).dot(u.col(j));
      u.col(j) -= c * u.col(k);
    }
    u.col(j) /= u.col(j).norm();
  }
  return u;
}

DensityMatrix random_density_matrix(const SubsystemLayout& layout, Rng& rng) {
  const auto d = layout.total_dim();
  Matrix g = ginibre(d, d, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho), layout);
}

}  // namespace scramble
