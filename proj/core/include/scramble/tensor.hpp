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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "scramble/layout.hpp"

namespace scramble {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerances for invariant checks. Construction-time checks use the tight
/// value; anything that has been through arithmetic gets the loose one.
inline constexpr double kConstructionTolerance = 1e-10;
inline constexpr double kArithmeticTolerance = 1e-9;

/// Normalized pure state on a labeled layout.
class Ket {
 public:
  Ket(Vector amplitudes, SubsystemLayout layout);

  /// Computational basis state with one digit per subsystem.
  static Ket basis(const SubsystemLayout& layout, const std::vector<std::size_t>& digits);
  /// Normalizes `amplitudes` before wrapping; throws if the norm is zero.
  static Ket normalized(Vector amplitudes, SubsystemLayout layout);

  const Vector& amplitudes() const { return amplitudes_; }
  const SubsystemLayout& layout() const { return layout_; }
  std::size_t dim() const { return layout_.total_dim(); }

  Ket relabeled(const LabelSet& labels) const;

 private:
  Vector amplitudes_;
  SubsystemLayout layout_;
};

/// Hermitian, unit-trace, positive semidefinite operator on a labeled layout.
class DensityMatrix {
 public:
  DensityMatrix(Matrix matrix, SubsystemLayout layout);

  static DensityMatrix maximally_mixed(const SubsystemLayout& layout);
  /// Row-major nested literal, e.g. {{0.5, 0}, {0, 0.5}}.
  static DensityMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows,
                                 SubsystemLayout layout);

  const Matrix& matrix() const { return matrix_; }
  const SubsystemLayout& layout() const { return layout_; }
  std::size_t dim() const { return layout_.total_dim(); }

  DensityMatrix relabeled(const LabelSet& labels) const;

 private:
  Matrix matrix_;
  SubsystemLayout layout_;
};

/// Inner-product-preserving map V with V^dagger V = I.
class Isometry {
 public:
  Isometry(Matrix matrix, SubsystemLayout input, SubsystemLayout output);

  static Isometry identity(const SubsystemLayout& layout);

  const Matrix& matrix() const { return matrix_; }
  const SubsystemLayout& input_layout() const { return input_; }
  const SubsystemLayout& output_layout() const { return output_; }
  bool is_square() const { return input_.total_dim() == output_.total_dim(); }

  Isometry with_output_labels(const LabelSet& labels) const;
  Isometry with_input_labels(const LabelSet& labels) const;

 private:
  Matrix matrix_;
  SubsystemLayout input_;
  SubsystemLayout output_;
};

struct Eigenpair {
  double value;
  Ket vector;
};

Ket tensor_product(const Ket& a, const Ket& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep`, in the layout order of the kept subsystems.
DensityMatrix partial_trace(const DensityMatrix& rho, const LabelSet& keep);

DensityMatrix projector(const Ket& psi);

/// (1/sqrt d) sum_i |i>|i> on the layout [a:d, b:d].
Ket maximally_entangled_state(std::size_t d, const std::string& a, const std::string& b);

/// Applies `v` to the subsystems of `state` named by v's input layout, with
/// identity elsewhere. The output subsystems take the place of the first
/// acted-on subsystem; untouched subsystems keep their relative order.
Ket apply_isometry(const Isometry& v, const Ket& state);
DensityMatrix apply_isometry(const Isometry& v, const DensityMatrix& state);

/// Reorders subsystems; `order` must be a permutation of the layout labels.
Ket permute(const Ket& psi, const LabelSet& order);
DensityMatrix permute(const DensityMatrix& rho, const LabelSet& order);

/// Eigenvalues sorted descending with orthonormal eigenvectors.
std::vector<Eigenpair> eigen_decomposition(const DensityMatrix& rho);
/// Same for a bare operator; throws ValidationError if it is not Hermitian.
std::vector<Eigenpair> eigen_decomposition(const Matrix& hermitian, const SubsystemLayout& layout);

namespace detail {

/// max |A - A^dagger| entry.
double hermiticity_defect(const Matrix& m);

/// Raw reduced matrix; `keep` are subsystem positions in ascending order.
Matrix partial_trace(const Matrix& rho, const std::vector<std::size_t>& dims,
                     const std::vector<std::size_t>& keep);

/// For each index of the permuted space, the index in the original space.
/// `perm[k]` is the original position of the subsystem placed at k.
std::vector<std::size_t> permutation_index_map(const std::vector<std::size_t>& dims,
                                               const std::vector<std::size_t>& perm);

Vector permute(const Vector& v, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);
Matrix permute(const Matrix& m, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);

Matrix kron(const Matrix& a, const Matrix& b);

/// Reduced state on `keep` (any order); result follows the order of `keep`.
Matrix reduce(const Matrix& rho, const SubsystemLayout& layout, const LabelSet& keep);

/// Eigenvalues of a Hermitian matrix clamped to [0, 1].
Eigen::VectorXd clamped_spectrum(const Matrix& rho);

}  // namespace detail

}  // namespace scramble
