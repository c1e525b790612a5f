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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "scramble/error.hpp"
#include "scramble/layout.hpp"
#include "scramble/optimizer_settings.hpp"
#include "scramble/sweep.hpp"

namespace scramble::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

enum class Quantity { I3, I3_acc, j3_fixed, J3_acc, Iacc, sweep, table };

std::string to_string(Quantity q);
/// Throws UsageError for unknown names.
Quantity parse_quantity(std::string_view text);

struct Partition {
  LabelSet c;
  LabelSet d;
};

/// "C=1;D=2" or "C=1,2;D=3"; D may be omitted.
Partition parse_partition(std::string_view text);

/// Radians, or multiples of pi such as "5pi/6", "-pi/2", "2*pi/3", "pi".
double parse_angle(std::string_view text);

/// "24x24".
std::pair<std::size_t, std::size_t> parse_grid(std::string_view text);

struct Encoding {
  double theta = 0.0;
  double phi = 0.0;
  double p0 = 0.5;
};

struct ScenarioConfig {
  std::string dynamics = "W3";
  std::optional<Partition> partition;
  Quantity quantity = Quantity::table;
  std::optional<Encoding> encoding;
  /// Sweep only.
  SweepQuantity sweep_quantity = SweepQuantity::j3;
  std::size_t grid_theta = 24;
  std::size_t grid_phi = 24;
  OptimizerSettings optimizer;
  std::string output_path;
  std::uint64_t seed = 1;
  bool strict = false;
  bool json = false;
};

/// Each run_* returns a process exit code; errors are reported on `err`.
int run_table(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err);
int run_sweep(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err);
int run_compute(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err);
int list_examples(std::ostream& out);

/// The table document without formatting or I/O.
nlohmann::ordered_json table_document(const ScenarioConfig& cfg);
/// Provenance document of a compute run.
nlohmann::ordered_json compute_document(const ScenarioConfig& cfg);

/// Full command line: parses `args` (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scramble::cli
