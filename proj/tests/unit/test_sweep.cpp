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
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "scramble/error.hpp"
#include "scramble/scrambling_states.hpp"
#include "scramble/sweep.hpp"

using namespace scramble;

namespace {

constexpr double kPi = std::numbers::pi;

OptimizerSettings quick_settings() {
  OptimizerSettings s;
  s.oracle_samples = 0;
  return s;
}

}  // namespace

TEST(SweepQuantityTest, ParseAndPrint) {
  EXPECT_EQ(parse_sweep_quantity("j3"), SweepQuantity::j3);
  EXPECT_EQ(parse_sweep_quantity("Iacc_RC"), SweepQuantity::iacc_rc);
  EXPECT_EQ(parse_sweep_quantity("iacc_rcd"), SweepQuantity::iacc_rcd);
  EXPECT_FALSE(parse_sweep_quantity("I3").has_value());
  EXPECT_EQ(to_string(SweepQuantity::iacc_rd), "Iacc_RD");
}

TEST(BasisSweep, W3J3PeaksAtTheExpectedCell) {
  const auto r = basis_sweep(find_example("W3").generator, {"1"}, {"2"}, 7, 7, SweepQuantity::j3, quick_settings());
  ASSERT_EQ(r.values.size(), 7u);
  ASSERT_EQ(r.values[0].size(), 7u);
  EXPECT_NEAR(r.theta_grid[r.argmax_theta], kPi / 2, 1e-12);
  EXPECT_NEAR(r.phi_grid[r.argmax_phi], 5 * kPi / 6, 1e-12);
  EXPECT_NEAR(r.max_value(), 0.186, 2e-3);
  EXPECT_TRUE(r.all_converged());
  EXPECT_EQ(r.quantity_tag, "j3");
  EXPECT_EQ(r.partition_tag, "C=1;D=2");
  for (const auto& row : r.values) {
    for (double v : row) EXPECT_TRUE(std::isfinite(v));
  }
}

TEST(BasisSweep, PosSingleQubitIsOneOnTheEquator) {
  const auto r = basis_sweep(find_example("pos").generator, {"1"}, {"2"}, 3, 3, SweepQuantity::iacc_rc, quick_settings());
  EXPECT_NEAR(r.values[1][0], 1.0, 1e-6);
}

TEST(BasisSweep, FullOutputIsAlwaysOneBit) {
  for (const char* name : {"W3", "neg"}) {
    const auto r = basis_sweep(find_example(name).generator, {"1"}, {"2", "3"}, 4, 4, SweepQuantity::iacc_rcd,
                               quick_settings());
    for (const auto& row : r.values) {
      for (double v : row) EXPECT_NEAR(v, 1.0, 1e-6) << name;
    }
  }
}

TEST(BasisSweep, SameValuesForAnyThreadCount) {
  auto s = quick_settings();
  s.threads = 1;
  const auto v = find_example("W3").generator;
  const auto a = basis_sweep(v, {"1"}, {"3"}, 4, 3, SweepQuantity::j3, s);
  s.threads = 4;
  const auto b = basis_sweep(v, {"1"}, {"3"}, 4, 3, SweepQuantity::j3, s);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.argmax_theta, b.argmax_theta);
  EXPECT_EQ(a.argmax_phi, b.argmax_phi);
}

TEST(BasisSweep, GridMustHaveTwoPoints) {
  EXPECT_THROW(basis_sweep(find_example("W3").generator, {"1"}, {"2"}, 1, 4, SweepQuantity::j3, quick_settings()),
               ConfigurationError);
}

TEST(SweepCsv, HeaderAndRows) {
  const auto r = basis_sweep(find_example("W3").generator, {"1"}, {"2"}, 2, 2, SweepQuantity::iacc_rc, quick_settings());
  std::ostringstream os;
  write_sweep_csv(r, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "theta,phi,value");
  int rows = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 2);
  }
  EXPECT_EQ(rows, 4);
}
