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
#include <cstdint>
#include <span>
#include <vector>

#include "scramble/layout.hpp"
#include "scramble/optimizer_settings.hpp"
#include "scramble/tensor.hpp"

namespace scramble {

/// Register weights p_x with the conditional states sigma_x reaching the
/// measured subsystem.
struct OutputEnsemble {
  std::vector<double> weights;
  std::vector<Matrix> states;
  SubsystemLayout layout;

  std::size_t dim() const { return layout.total_dim(); }
};

/// H(X) of the register.
double register_entropy(const OutputEnsemble& ensemble);

/// S(sum p_x sigma_x) - sum p_x S(sigma_x).
double holevo_quantity(const OutputEnsemble& ensemble);

/// I(X:Y) when the columns of `basis` are measured.
double measured_information(const OutputEnsemble& ensemble, const Matrix& basis);

/// Conditional outcome probabilities P(y|x), one row per letter.
Eigen::MatrixXd outcome_conditionals(const OutputEnsemble& ensemble, const Matrix& basis);

enum class SearchEffort {
  /// Structured seeds, coarse grid and a single simplex pass. Used inside
  /// outer searches where only the ranking matters.
  quick,
  /// Grid or random restarts plus full refinement rounds.
  full,
};

struct MeasurementOptimum {
  double value = 0.0;
  Matrix basis;
  bool converged = false;
  /// The value reached min(H(X), Holevo) so the search stopped early.
  bool saturated = false;
  std::size_t evaluations = 0;
};

/// Best complete projective measurement for `ensemble`. `seeds` are extra
/// starting bases (e.g. a product of optimal local measurements).
MeasurementOptimum optimize_measurement(const OutputEnsemble& ensemble, const OptimizerSettings& settings,
                                        std::uint64_t seed, std::span<const Matrix> seeds = {},
                                        SearchEffort effort = SearchEffort::full);

struct OracleReport {
  std::size_t samples = 0;
  double best_sampled = 0.0;
  double value = 0.0;
  double margin = 0.0;
  bool passed = true;
};

/// Samples Haar-random projective measurements and checks that none beats
/// `value` by more than `margin`.
OracleReport measurement_oracle(const OutputEnsemble& ensemble, double value, std::size_t samples, double margin,
                                std::uint64_t seed);

}  // namespace scramble
