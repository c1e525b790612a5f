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

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "scramble/tensor.hpp"

namespace scramble {

/// Orthonormal qubit pair used to encode one classical bit.
///
/// Letter 0 is cos(theta/2)|0> + e^{-i phi} sin(theta/2)|1> and letter 1 is
/// its orthogonal complement sin(theta/2)|0> - e^{-i phi} cos(theta/2)|1>.
/// The azimuth is measured clockwise on the Bloch sphere (note the sign of the
/// phase); this is the orientation in which the W3 joint-encoding optimum
/// sits at phi = 5pi/6.
class EncodingBasis {
 public:
  EncodingBasis(double theta, double phi);

  static EncodingBasis computational() { return {0.0, 0.0}; }
  /// {|+>, |->}
  static EncodingBasis hadamard();

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  Vector amplitudes(std::size_t letter) const;
  std::array<Ket, 2> kets(const std::string& label = "A") const;

  /// Same basis with theta in [0, pi] and phi in [0, pi). `swapped` is set
  /// when the two letters trade places in the canonical form. Angles within
  /// 1e-6 of 0 or pi are snapped onto the boundary.
  EncodingBasis canonical(bool* swapped = nullptr) const;

 private:
  double theta_;
  double phi_;
};

/// Complete rank-1 projective measurement on a (possibly composite) subsystem.
class ProjectiveMeasurement {
 public:
  /// Trivial one-outcome measurement on the empty layout.
  ProjectiveMeasurement() : basis_(Matrix::Identity(1, 1)) {}
  /// Columns of `basis` are the measurement vectors; validated orthonormal.
  ProjectiveMeasurement(Matrix basis, SubsystemLayout layout, std::vector<double> parameters = {});
  explicit ProjectiveMeasurement(const std::vector<Ket>& basis);

  static ProjectiveMeasurement computational(const SubsystemLayout& layout);
  /// Basis generated by measurement_basis(); parameters are retained.
  static ProjectiveMeasurement from_parameters(const SubsystemLayout& layout, std::span<const double> parameters);
  /// Wraps a unitary and records its canonical parameters.
  static ProjectiveMeasurement from_unitary(const Matrix& unitary, const SubsystemLayout& layout);

  const Matrix& basis_matrix() const { return basis_; }
  const SubsystemLayout& layout() const { return layout_; }
  const std::vector<double>& parameters() const { return parameters_; }
  std::size_t outcomes() const { return static_cast<std::size_t>(basis_.cols()); }
  std::vector<Ket> basis() const;

 private:
  Matrix basis_;
  SubsystemLayout layout_;
  std::vector<double> parameters_;
};

/// d(d-1): one (angle, phase) pair per two-level rotation.
std::size_t measurement_parameter_count(std::size_t dim);

/// Planes (p, p+1) of the two-level rotations, in product order.
std::vector<std::array<std::size_t, 2>> rotation_planes(std::size_t dim);

/// U = G_1 G_2 ... G_m with G_k acting on plane k as
///   [[cos(a/2), -e^{-ib} sin(a/2)], [e^{ib} sin(a/2), cos(a/2)]]
/// and parameters laid out (a_1, b_1, a_2, b_2, ...). Up to column phases this
/// reaches every orthonormal basis. For a qubit (a, b) are the Bloch angles of
/// the first basis vector.
Matrix measurement_basis(std::size_t dim, std::span<const double> parameters);

/// `base` * G_1 ... G_m; the identity chart around `base` at parameters = 0.
void apply_rotations(Matrix& base, std::span<const double> parameters);

/// Inverse of measurement_basis up to column phases.
std::vector<double> measurement_parameters(const Matrix& unitary);

}  // namespace scramble
