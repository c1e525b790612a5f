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

#include "scramble/measurement.hpp"

#include <cmath>
#include <numbers>

#include "scramble/error.hpp"

namespace scramble {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  if (r >= period) r -= period;
  return r;
}

}  // namespace

EncodingBasis::EncodingBasis(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) throw DomainError("encoding angles must be finite");
}

EncodingBasis EncodingBasis::hadamard() { return {kPi / 2, 0.0}; }

Vector EncodingBasis::amplitudes(std::size_t letter) const {
  const double c = std::cos(theta_ / 2);
  const double s = std::sin(theta_ / 2);
  const Complex phase = std::polar(1.0, -phi_);
  Vector v(2);
  if (letter == 0) {
    v << c, phase * s;
  } else if (letter == 1) {
    v << s, -phase * c;
  } else {
    throw DimensionError("an encoding basis has two letters");
  }
  return v;
}

std::array<Ket, 2> EncodingBasis::kets(const std::string& label) const {
  const auto layout = SubsystemLayout::qubits({label});
  return {Ket(amplitudes(0), layout), Ket(amplitudes(1), layout)};
}

EncodingBasis EncodingBasis::canonical(bool* swapped) const {
  // Angles this close to a boundary are put on it.
  constexpr double kSnap = 1e-6;
  auto snap = [](double a, double edge) { return std::abs(a - edge) < kSnap ? edge : a; };
  double theta = snap(wrap(theta_, 2 * kPi), 2 * kPi);
  double phi = phi_;
  bool swap = false;
  if (theta >= 2 * kPi) theta = 0.0;
  if (theta > kPi) {
    theta = 2 * kPi - theta;
    phi += kPi;
  }
  phi = snap(snap(snap(wrap(phi, 2 * kPi), 2 * kPi), kPi), 0.0);
  if (phi >= 2 * kPi) phi = 0.0;
  if (phi >= kPi) {
    phi -= kPi;
    theta = kPi - theta;
    swap = true;
  }
  theta = snap(snap(theta, 0.0), kPi);
  // At the poles the azimuth carries no information.
  if (theta == 0.0 || theta == kPi) phi = 0.0;
  if (swapped) *swapped = swap;
  return {theta, phi};
}

ProjectiveMeasurement::ProjectiveMeasurement(Matrix basis, SubsystemLayout layout, std::vector<double> parameters)
    : basis_(std::move(basis)), layout_(std::move(layout)), parameters_(std::move(parameters)) {
  const auto d = static_cast<Eigen::Index>(layout_.total_dim());
  if (basis_.rows() != d) throw DimensionError("measurement vectors do not match the measured layout");
  if (basis_.cols() != d) {
    throw MeasurementError("incomplete measurement: " + std::to_string(basis_.cols()) + " vectors for dimension " +
                           std::to_string(d));
  }
  const Matrix gram = basis_.adjoint() * basis_;
  if ((gram - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > kConstructionTolerance) {
    throw MeasurementError("measurement vectors are not orthonormal");
  }
}

ProjectiveMeasurement::ProjectiveMeasurement(const std::vector<Ket>& basis)
    : ProjectiveMeasurement(
          [&] {
            if (basis.empty()) throw MeasurementError("empty measurement");
            Matrix m(basis.front().amplitudes().size(), static_cast<Eigen::Index>(basis.size()));
            for (std::size_t k = 0; k < basis.size(); ++k) {
              if (!(basis[k].layout() == basis.front().layout())) {
                throw MeasurementError("measurement vectors live on different layouts");
              }
              m.col(static_cast<Eigen::Index>(k)) = basis[k].amplitudes();
            }
            return m;
          }(),
          basis.empty() ? SubsystemLayout{} : basis.front().layout()) {}

ProjectiveMeasurement ProjectiveMeasurement::computational(const SubsystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  return ProjectiveMeasurement(Matrix::Identity(d, d), layout,
                               std::vector<double>(measurement_parameter_count(layout.total_dim()), 0.0));
}

ProjectiveMeasurement ProjectiveMeasurement::from_parameters(const SubsystemLayout& layout,
                                                             std::span<const double> parameters) {
  return ProjectiveMeasurement(measurement_basis(layout.total_dim(), parameters), layout,
                               std::vector<double>(parameters.begin(), parameters.end()));
}

ProjectiveMeasurement ProjectiveMeasurement::from_unitary(const Matrix& unitary, const SubsystemLayout& layout) {
  return ProjectiveMeasurement(unitary, layout, measurement_parameters(unitary));
}

std::vector<Ket> ProjectiveMeasurement::basis() const {
  std::vector<Ket> out;
  out.reserve(outcomes());
  for (Eigen::Index k = 0; k < basis_.cols(); ++k) out.push_back(Ket::normalized(basis_.col(k), layout_));
  return out;
}

std::size_t measurement_parameter_count(std::size_t dim) { return dim * (dim - 1); }

std::vector<std::array<std::size_t, 2>> rotation_planes(std::size_t dim) {
  // Order of a bottom-up Givens elimination, column by column.
  std::vector<std::array<std::size_t, 2>> planes;
  for (std::size_t col = 0; col + 1 < dim; ++col) {
    for (std::size_t row = dim - 1; row > col; --row) planes.push_back({row - 1, row});
  }
  return planes;
}

void apply_rotations(Matrix& base, std::span<const double> parameters) {
  const auto dim = static_cast<std::size_t>(base.cols());
  if (parameters.size() != measurement_parameter_count(dim)) {
    throw DimensionError("expected " + std::to_string(measurement_parameter_count(dim)) + " basis parameters");
  }
  const auto planes = rotation_planes(dim);
  for (std::size_t k = 0; k < planes.size(); ++k) {
    const double c = std::cos(parameters[2 * k] / 2);
    const double s = std::sin(parameters[2 * k] / 2);
    const Complex e = std::polar(1.0, parameters[2 * k + 1]);
    const auto p = static_cast<Eigen::Index>(planes[k][0]);
    const auto q = static_cast<Eigen::Index>(planes[k][1]);
    const Vector cp = base.col(p);
    base.col(p) = c * cp + (e * s) * base.col(q);
    base.col(q) = (-std::conj(e) * s) * cp + c * base.col(q);
  }
}

Matrix measurement_basis(std::size_t dim, std::span<const double> parameters) {
  Matrix u = Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  apply_rotations(u, parameters);
  return u;
}

std::vector<double> measurement_parameters(const Matrix& unitary) {
  const auto dim = static_cast<std::size_t>(unitary.cols());
  if (unitary.rows() != unitary.cols()) throw DimensionError("basis matrix must be square");
  Matrix m = unitary;
  const auto planes = rotation_planes(dim);
  std::vector<double> params;
  params.reserve(2 * planes.size());
  std::size_t k = 0;
  for (std::size_t col = 0; col + 1 < dim; ++col) {
    for (std::size_t row = dim - 1; row > col; --row, ++k) {
      const auto p = static_cast<Eigen::Index>(planes[k][0]);
      const auto q = static_cast<Eigen::Index>(planes[k][1]);
      const auto j = static_cast<Eigen::Index>(col);
      const Complex a = m(p, j);
      const Complex b = m(q, j);
      double theta = 0.0;
      double phi = 0.0;
      if (std::abs(b) > 0.0) {
        theta = 2.0 * std::atan2(std::abs(b), std::abs(a));
        phi = std::abs(a) > 0.0 ? std::arg(b) - std::arg(a) : 0.0;
      }
      params.push_back(theta);
      params.push_back(phi);
      // Left-multiply by G^dagger on rows (p, q).
      const double c = std::cos(theta / 2);
      const double s = std::sin(theta / 2);
      const Complex e = std::polar(1.0, phi);
      const Eigen::RowVectorXcd rp = m.row(p);
      m.row(p) = c * rp + (std::conj(e) * s) * m.row(q);
      m.row(q) = (-e * s) * rp + c * m.row(q);
    }
  }
  return params;
}

}  // namespace scramble
