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
#include <functional>
#include <span>
#include <vector>

namespace scramble {

using Objective = std::function<double(std::span<const double>)>;

struct SimplexOptions {
  double initial_step = 0.25;
  /// Spread of objective values across the simplex at which a run stops.
  double value_tolerance = 1e-14;
  /// Simplex diameter at which a run stops.
  double step_tolerance = 1e-10;
  std::size_t max_evaluations = 4000;
};

struct SimplexResult {
  std::vector<double> point;
  double value = 0.0;
  std::size_t evaluations = 0;
  /// The last run stopped on a tolerance rather than the evaluation budget.
  bool converged = false;
};

/// Nelder-Mead maximization from `start`.
SimplexResult maximize_simplex(const Objective& f, std::vector<double> start, const SimplexOptions& options);

/// Repeats maximize_simplex from its own optimum (fresh simplex each round)
/// until a round improves the objective by less than `round_tolerance`.
/// `converged` is false if `max_rounds` is exhausted or the last run hit its
/// evaluation budget.
SimplexResult refine_simplex(const Objective& f, std::vector<double> start, const SimplexOptions& options,
                             double round_tolerance, std::size_t max_rounds = 8);

}  // namespace scramble
