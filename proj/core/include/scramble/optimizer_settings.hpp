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

#include <nlohmann/json.hpp>

#include "scramble/simplex.hpp"

namespace scramble {

/// Knobs of the grid-plus-simplex searches used for every sup-type quantity.
struct OptimizerSettings {
  /// Encoding grid over theta, phi in [0, pi] (endpoints included).
  std::size_t encoding_grid_theta = 24;
  std::size_t encoding_grid_phi = 24;
  /// Bloch grid for single-qubit measurements, per angle.
  std::size_t measurement_grid = 24;
  /// Number of best grid cells / seeds refined with the simplex.
  std::size_t refine_top_k = 5;
  /// Extra Haar-random starting bases for joint measurements (dim > 2).
  std::size_t measurement_restarts = 4;
  /// A refinement round that improves by less than this ends the search.
  double improvement_tolerance = 1e-8;
  std::size_t max_refine_rounds = 8;
  double simplex_value_tolerance = 1e-14;
  double simplex_step_tolerance = 1e-10;
  /// Per simplex run.
  std::size_t max_evaluations = 4000;
  /// Random projective measurements drawn by the under-optimization oracle.
  std::size_t oracle_samples = 100000;
  double oracle_margin = 1e-4;
  std::uint64_t seed = 1;
  /// 0 means hardware concurrency; SCRAMBLE_THREADS caps it either way.
  std::size_t threads = 0;
  /// Optimize the register weights in J3acc as well (balanced otherwise).
  bool optimize_weights_j3 = false;

  SimplexOptions simplex(double initial_step) const;
  /// Throws ConfigurationError on out-of-range values.
  void validate() const;
};

/// Works for both nlohmann::json and nlohmann::ordered_json.
template <typename Json>
void to_json(Json& j, const OptimizerSettings& s) {
  j = Json{{"encoding_grid_theta", s.encoding_grid_theta},
                     {"encoding_grid_phi", s.encoding_grid_phi},
                     {"measurement_grid", s.measurement_grid},
                     {"refine_top_k", s.refine_top_k},
                     {"measurement_restarts", s.measurement_restarts},
                     {"improvement_tolerance", s.improvement_tolerance},
                     {"max_refine_rounds", s.max_refine_rounds},
                     {"simplex_value_tolerance", s.simplex_value_tolerance},
                     {"simplex_step_tolerance", s.simplex_step_tolerance},
                     {"max_evaluations", s.max_evaluations},
                     {"oracle_samples", s.oracle_samples},
                     {"oracle_margin", s.oracle_margin},
                     {"seed", s.seed},
                     {"threads", s.threads},
                     {"optimize_weights_j3", s.optimize_weights_j3}};
}

/// Missing keys keep their defaults; unknown keys are rejected.
void from_json(const nlohmann::json& j, OptimizerSettings& s);

}  // namespace scramble
