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

#include <cmath>

#include <gtest/gtest.h>

#include "scramble/simplex.hpp"

using namespace scramble;

TEST(Simplex, QuadraticPeak) {
  const Objective f = [](std::span<const double> x) { return 3.0 - (x[0] - 1.0) * (x[0] - 1.0) - 2.0 * (x[1] + 0.5) * (x[1] + 0.5); };
  const auto r = maximize_simplex(f, {0.0, 0.0}, SimplexOptions{});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 3.0, 1e-12);
  EXPECT_NEAR(r.point[0], 1.0, 1e-6);
  EXPECT_NEAR(r.point[1], -0.5, 1e-6);
}

TEST(Simplex, Rosenbrock) {
  const Objective f = [](std::span<const double> x) {
    return -(100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2));
  };
  SimplexOptions o;
  o.initial_step = 0.5;
  o.max_evaluations = 20000;
  const auto r = refine_simplex(f, {-1.2, 1.0}, o, 1e-12);
  EXPECT_NEAR(r.value, 0.0, 1e-10);
  EXPECT_NEAR(r.point[0], 1.0, 1e-4);
}

TEST(Simplex, PeriodicObjective) {
  const Objective f = [](std::span<const double> x) { return std::cos(x[0] - 0.7) * std::cos(x[1]); };
  const auto r = maximize_simplex(f, {0.3, 0.2}, SimplexOptions{});
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(Simplex, EvaluationBudgetIsReported) {
  int calls = 0;
  const Objective f = [&](std::span<const double> x) {
    ++calls;
    return -std::abs(x[0] - 100.0);
  };
  SimplexOptions o;
  o.max_evaluations = 30;
  const auto r = maximize_simplex(f, {0.0}, o);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.evaluations, 32u);
  EXPECT_EQ(static_cast<std::size_t>(calls), r.evaluations);
}

TEST(Simplex, NeverReturnsWorseThanTheStart) {
  const Objective f = [](std::span<const double> x) { return std::sin(5 * x[0]) + std::cos(3 * x[1]); };
  for (double s : {-2.0, 0.0, 1.3}) {
    const std::vector<double> start{s, -s};
    const auto r = refine_simplex(f, start, SimplexOptions{}, 1e-10);
    EXPECT_GE(r.value, f(start) - 1e-15);
  }
}
