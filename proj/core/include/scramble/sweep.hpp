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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "scramble/accessible_info.hpp"

namespace scramble {

enum class SweepQuantity { j3, iacc_rc, iacc_rd, iacc_rcd };

std::string to_string(SweepQuantity q);
/// Accepts "j3", "Iacc_RC", "Iacc_RD", "Iacc_RCD" (case-insensitive).
std::optional<SweepQuantity> parse_sweep_quantity(std::string_view text);

struct SweepResult {
  std::vector<double> theta_grid;
  std::vector<double> phi_grid;
  /// values[i][j] at (theta_grid[i], phi_grid[j]), in bits.
  std::vector<std::vector<double>> values;
  std::vector<std::vector<bool>> converged;
  std::string quantity_tag;
  std::string partition_tag;
  /// First maximal cell in theta-major order.
  std::size_t argmax_theta = 0;
  std::size_t argmax_phi = 0;

  double max_value() const { return values[argmax_theta][argmax_phi]; }
  bool all_converged() const;
};

/// Evaluates `quantity` on an n_theta x n_phi grid over [0, pi]^2 at
/// balanced weights. Cells are independent and may run in parallel.
SweepResult basis_sweep(const Isometry& v, const LabelSet& c, const LabelSet& d, std::size_t n_theta,
                        std::size_t n_phi, SweepQuantity quantity, const OptimizerSettings& settings);

/// Header `theta,phi,value`, one row per cell, 10 significant digits.
void write_sweep_csv(const SweepResult& result, std::ostream& out);

}  // namespace scramble
