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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace scramble {

/// Discrete memoryless channel; row x holds P(y|x).
class ClassicalChannel {
 public:
  explicit ClassicalChannel(Eigen::MatrixXd conditionals);
  static ClassicalChannel binary_symmetric(double flip);
  /// Input 0 is noiseless; input 1 is received as 0 with probability `q`.
  static ClassicalChannel z_channel(double q);

  const Eigen::MatrixXd& conditionals() const { return p_; }
  std::size_t inputs() const { return static_cast<std::size_t>(p_.rows()); }
  std::size_t outputs() const { return static_cast<std::size_t>(p_.cols()); }

  /// I(X:Y) in bits for the input distribution `px`.
  double mutual_information(const Eigen::VectorXd& px) const;

 private:
  Eigen::MatrixXd p_;
};

struct CapacityResult {
  double capacity = 0.0;
  Eigen::VectorXd input_distribution;
  std::size_t iterations = 0;
  bool converged = false;
  /// Mutual information of each iterate.
  std::vector<double> history;
};

/// Blahut-Arimoto iteration; stops when the upper and lower capacity bounds
/// are within `tolerance` bits.
CapacityResult blahut_arimoto(const ClassicalChannel& channel, double tolerance = 1e-12, std::size_t max_iterations = 100000);

}  // namespace scramble
