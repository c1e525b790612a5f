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

#include "scramble/channel_capacity.hpp"

#include <algorithm>
#include <cmath>

#include "scramble/error.hpp"

namespace scramble {

namespace {

constexpr double kStochasticTolerance = 1e-12;

// sum_y P(y|x) log2(P(y|x) / q(y))
double divergence_to_output(const Eigen::MatrixXd& p, Eigen::Index x, const Eigen::VectorXd& q) {
  double d = 0.0;
  for (Eigen::Index y = 0; y < p.cols(); ++y) {
    const double pyx = p(x, y);
    if (pyx > 0.0) d += pyx * std::log2(pyx / q(y));
  }
  return d;
}

}  // namespace

ClassicalChannel::ClassicalChannel(Eigen::MatrixXd conditionals) : p_(std::move(conditionals)) {
  if (p_.rows() == 0 || p_.cols() == 0) throw ValidationError("channel matrix is empty");
  for (Eigen::Index x = 0; x < p_.rows(); ++x) {
    for (Eigen::Index y = 0; y < p_.cols(); ++y) {
      if (!std::isfinite(p_(x, y)) || p_(x, y) < 0.0) throw ValidationError("channel entries must be nonnegative");
    }
    if (std::abs(p_.row(x).sum() - 1.0) > kStochasticTolerance) throw ValidationError("channel rows must sum to 1");
  }
}

ClassicalChannel ClassicalChannel::binary_symmetric(double flip) {
  Eigen::MatrixXd m(2, 2);
  m << 1.0 - flip, flip, flip, 1.0 - flip;
  return ClassicalChannel(m);
}

ClassicalChannel ClassicalChannel::z_channel(double q) {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 0.0, q, 1.0 - q;
  return ClassicalChannel(m);
}

double ClassicalChannel::mutual_information(const Eigen::VectorXd& px) const {
  if (px.size() != p_.rows()) throw DimensionError("input distribution has the wrong length");
  const Eigen::VectorXd q = p_.transpose() * px;
  double mi = 0.0;
  for (Eigen::Index x = 0; x < p_.rows(); ++x) {
    if (px(x) > 0.0) mi += px(x) * divergence_to_output(p_, x, q);
  }
  return std::max(mi, 0.0);
}

CapacityResult blahut_arimoto(const ClassicalChannel& channel, double tolerance, std::size_t max_iterations) {
  if (!(tolerance > 0.0)) throw ConfigurationError("tolerance must be positive");
  const auto& p = channel.conditionals();
  const Eigen::Index nx = p.rows();

  CapacityResult result;
  Eigen::VectorXd px = Eigen::VectorXd::Constant(nx, 1.0 / static_cast<double>(nx));
  Eigen::VectorXd d(nx);

  for (std::size_t it = 0; it < max_iterations; ++it) {
    const Eigen::VectorXd q = p.transpose() * px;
    for (Eigen::Index x = 0; x < nx; ++x) d(x) = divergence_to_output(p, x, q);
    // I(px) = sum px d  <=  C  <=  max d
    const double lower = std::max(px.dot(d), 0.0);
    const double upper = d.maxCoeff();
    result.history.push_back(lower);
    result.iterations = it + 1;
    if (upper - lower < tolerance) {
      result.converged = true;
      break;
    }
    Eigen::VectorXd next(nx);
    for (Eigen::Index x = 0; x < nx; ++x) next(x) = px(x) * std::exp2(d(x) - upper);
    px = next / next.sum();
  }
  result.input_distribution = px;
  result.capacity = channel.mutual_information(px);
  if (!result.history.empty()) result.capacity = std::max(result.capacity, result.history.back());
  return result;
}

}  // namespace scramble
