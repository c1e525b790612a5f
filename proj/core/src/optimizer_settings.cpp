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

#include "scramble/optimizer_settings.hpp"

#include <set>
#include <string>

#include "scramble/error.hpp"

namespace scramble {

SimplexOptions OptimizerSettings::simplex(double initial_step) const {
  SimplexOptions o;
  o.initial_step = initial_step;
  o.value_tolerance = simplex_value_tolerance;
  o.step_tolerance = simplex_step_tolerance;
  o.max_evaluations = max_evaluations;
  return o;
}

void OptimizerSettings::validate() const {
  if (encoding_grid_theta < 2 || encoding_grid_phi < 2) throw ConfigurationError("encoding grid needs at least 2 points per angle");
  if (measurement_grid < 2) throw ConfigurationError("measurement grid needs at least 2 points per angle");
  if (refine_top_k == 0) throw ConfigurationError("refine_top_k must be positive");
  if (!(improvement_tolerance > 0.0)) throw ConfigurationError("improvement_tolerance must be positive");
  if (max_refine_rounds == 0) throw ConfigurationError("max_refine_rounds must be positive");
  if (!(simplex_value_tolerance >= 0.0) || !(simplex_step_tolerance > 0.0)) {
    throw ConfigurationError("simplex tolerances must be positive");
  }
  if (max_evaluations < 10) throw ConfigurationError("max_evaluations too small");
  if (!(oracle_margin >= 0.0)) throw ConfigurationError("oracle_margin must be nonnegative");
}

void from_json(const nlohmann::json& j, OptimizerSettings& s) {
  if (!j.is_object()) throw ConfigurationError("optimizer settings must be a key-value object");
  static const std::set<std::string> known = {
      "encoding_grid_theta", "encoding_grid_phi", "measurement_grid",     "refine_top_k",
      "measurement_restarts", "improvement_tolerance", "max_refine_rounds", "simplex_value_tolerance",
      "simplex_step_tolerance", "max_evaluations", "oracle_samples",       "oracle_margin",
      "seed",                 "threads",            "optimize_weights_j3"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ConfigurationError("unknown optimizer setting '" + key + "'");
  }
  auto read = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  try {
    read("encoding_grid_theta", s.encoding_grid_theta);
    read("encoding_grid_phi", s.encoding_grid_phi);
    read("measurement_grid", s.measurement_grid);
    read("refine_top_k", s.refine_top_k);
    read("measurement_restarts", s.measurement_restarts);
    read("improvement_tolerance", s.improvement_tolerance);
    read("max_refine_rounds", s.max_refine_rounds);
    read("simplex_value_tolerance", s.simplex_value_tolerance);
    read("simplex_step_tolerance", s.simplex_step_tolerance);
    read("max_evaluations", s.max_evaluations);
    read("oracle_samples", s.oracle_samples);
    read("oracle_margin", s.oracle_margin);
    read("seed", s.seed);
    read("threads", s.threads);
    read("optimize_weights_j3", s.optimize_weights_j3);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("bad optimizer setting: ") + e.what());
  }
  s.validate();
}

}  // namespace scramble
