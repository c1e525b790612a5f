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

#include "scramble/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace scramble {

SimplexResult maximize_simplex(const Objective& f, std::vector<double> start, const SimplexOptions& options) {
  const std::size_t n = start.size();
  SimplexResult result;
  if (n == 0) {
    result.value = f(start);
    result.point = std::move(start);
    result.evaluations = 1;
    result.converged = true;
    return result;
  }

  // Minimize -f with the standard coefficients.
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  std::size_t evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? -v : std::numeric_limits<double>::infinity();
  };

  std::vector<std::vector<double>> simplex(n + 1, start);
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  bool converged = false;

  while (evals < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) diameter = std::max(diameter, std::abs(simplex[i][k] - simplex[best][k]));
    }
    if (values[worst] - values[best] <= options.value_tolerance && diameter <= options.step_tolerance * 1e3) {
      converged = true;
      break;
    }
    if (diameter <= options.step_tolerance) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
    }
    for (std::size_t k = 0; k < n; ++k) trial[k] = centroid[k] + kReflect * (centroid[k] - simplex[worst][k]);
    const double fr = eval(trial);

    if (fr < values[best]) {
      for (std::size_t k = 0; k < n; ++k) trial2[k] = centroid[k] + kExpand * (trial[k] - centroid[k]);
      const double fe = eval(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    for (std::size_t k = 0; k < n; ++k) {
      trial2[k] = outside ? centroid[k] + kContract * (trial[k] - centroid[k])
                          : centroid[k] + kContract * (simplex[worst][k] - centroid[k]);
    }
    const double fc = eval(trial2);
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = trial2;
      values[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) simplex[i][k] = simplex[best][k] + kShrink * (simplex[i][k] - simplex[best][k]);
      values[i] = eval(simplex[i]);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  result.point = simplex[best];
  result.value = -values[best];
  result.evaluations = evals;
  result.converged = converged;
  return result;
}

SimplexResult refine_simplex(const Objective& f, std::vector<double> start, const SimplexOptions& options,
                             double round_tolerance, std::size_t max_rounds) {
  SimplexOptions round_options = options;
  SimplexResult best = maximize_simplex(f, std::move(start), round_options);
  std::size_t evaluations = best.evaluations;
  bool settled = false;
  for (std::size_t round = 1; round < max_rounds; ++round) {
    round_options.initial_step = std::max(round_options.initial_step * 0.5, 1e-4);
    SimplexResult next = maximize_simplex(f, best.point, round_options);
    evaluations += next.evaluations;
    const double gain = next.value - best.value;
    if (next.value >= best.value) best = std::move(next);
    if (gain < round_tolerance) {
      settled = true;
      break;
    }
  }
  best.evaluations = evaluations;
  best.converged = settled && best.converged;
  return best;
}

}  // namespace scramble
