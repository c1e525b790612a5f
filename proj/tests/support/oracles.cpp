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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

namespace {

std::vector<std::size_t> digits_of(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = index % dims[k];
    index /= dims[k];
  }
  return d;
}

}  // namespace

Matrix partial_trace(const Matrix& rho, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> kept(keep);
  std::sort(kept.begin(), kept.end());
  std::size_t dk = 1;
  for (auto k : kept) dk *= dims[k];
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  const auto n = static_cast<std::size_t>(rho.rows());
  for (std::size_t i = 0; i < n; ++i) {
    const auto di = digits_of(i, dims);
    for (std::size_t j = 0; j < n; ++j) {
      const auto dj = digits_of(j, dims);
      bool traced_equal = true;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (std::find(kept.begin(), kept.end(), k) == kept.end() && di[k] != dj[k]) traced_equal = false;
      }
      if (!traced_equal) continue;
      std::size_t a = 0, b = 0;
      for (auto k : kept) {
        a = a * dims[k] + di[k];
        b = b * dims[k] + dj[k];
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) += rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

double entropy(const Matrix& rho) {
  Eigen::ComplexEigenSolver<Matrix> solver(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double l = solver.eigenvalues()(i).real();
    if (l > 1e-12) s -= l * std::log2(l);
  }
  return s;
}

double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double mutual_information(const std::vector<double>& px, const std::vector<std::vector<double>>& q) {
  const std::size_t ny = q.front().size();
  double mi = 0.0;
  for (std::size_t y = 0; y < ny; ++y) {
    double r = 0.0;
    for (std::size_t x = 0; x < px.size(); ++x) r += px[x] * q[x][y];
    for (std::size_t x = 0; x < px.size(); ++x) {
      const double j = px[x] * q[x][y];
      if (j > 0.0) mi += j * std::log2(q[x][y] / r);
    }
  }
  return mi;
}

double tripartite(const Matrix& rho, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& a,
                  const std::vector<std::size_t>& b, const std::vector<std::size_t>& c) {
  auto s = [&](std::vector<std::vector<std::size_t>> groups) {
    std::vector<std::size_t> keep;
    for (const auto& g : groups) keep.insert(keep.end(), g.begin(), g.end());
    return entropy(partial_trace(rho, dims, keep));
  };
  return s({a}) + s({b}) + s({c}) - s({a, b}) - s({a, c}) - s({b, c}) + s({a, b, c});
}

Matrix haar_unitary(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(d);
  Matrix z(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex ph = r(i, i) / std::abs(r(i, i));
    q.col(i) *= ph;
  }
  return q;
}

double measured_information(const std::vector<double>& px, const std::vector<Matrix>& states, const Matrix& basis) {
  std::vector<std::vector<double>> q(px.size(), std::vector<double>(static_cast<std::size_t>(basis.cols())));
  for (std::size_t x = 0; x < px.size(); ++x) {
    for (Eigen::Index y = 0; y < basis.cols(); ++y) {
      q[x][static_cast<std::size_t>(y)] = std::max(0.0, (basis.col(y).adjoint() * states[x] * basis.col(y))(0, 0).real());
    }
  }
  return mutual_information(px, q);
}

double sampled_accessible_information(const std::vector<double>& px, const std::vector<Matrix>& states,
                                      std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double best = 0.0;
  const auto d = static_cast<std::size_t>(states.front().rows());
  for (std::size_t i = 0; i < samples; ++i) best = std::max(best, measured_information(px, states, haar_unitary(d, rng)));
  return best;
}

double bloch_scan_accessible_information(const std::vector<double>& px, const std::vector<Matrix>& states, std::size_t n) {
  double best = 0.0;
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i <= n; ++i) {
    const double theta = pi * static_cast<double>(i) / static_cast<double>(n);
    for (std::size_t j = 0; j < 2 * n; ++j) {
      const double phi = pi * static_cast<double>(j) / static_cast<double>(n);
      Matrix b(2, 2);
      b << std::cos(theta / 2), -std::exp(Complex(0, -phi)) * std::sin(theta / 2),
          std::exp(Complex(0, phi)) * std::sin(theta / 2), std::cos(theta / 2);
      best = std::max(best, measured_information(px, states, b));
    }
  }
  return best;
}

double z_channel_capacity(double q) { return std::log2(1.0 + (1.0 - q) * std::pow(q, q / (1.0 - q))); }

Eigen::VectorXcd bits_ket(std::size_t qubits, const std::vector<std::pair<const char*, Complex>>& terms) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::size_t{1} << qubits));
  for (const auto& [bits, amp] : terms) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < qubits; ++k) idx = 2 * idx + static_cast<std::size_t>(bits[k] - '0');
    v(static_cast<Eigen::Index>(idx)) += amp;
  }
  return v / v.norm();
}

}  // namespace oracle
