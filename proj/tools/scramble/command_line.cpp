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

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scramble/cli.hpp"

namespace scramble::cli {

namespace {

struct CommonFlags {
  std::uint64_t seed = 1;
  std::string out;
  bool strict = false;
  std::string format = "text";
  std::string settings_path;
  std::optional<std::size_t> oracle_samples;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--seed", f.seed, "Random seed (optimizer restarts and oracle)");
  cmd->add_option("--out", f.out, "Output file");
  cmd->add_flag("--strict", f.strict, "Exit with status 3 on any convergence or oracle flag");
  cmd->add_option("--format", f.format, "Console output: text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--settings", f.settings_path, "Optimizer settings as a JSON object");
  cmd->add_option("--oracle-samples", f.oracle_samples, "Random measurements per oracle check (0 skips)");
}

ScenarioConfig base_config(const CommonFlags& f) {
  ScenarioConfig cfg;
  if (!f.settings_path.empty()) {
    std::ifstream in(f.settings_path);
    if (!in) throw IoError("cannot read settings file '" + f.settings_path + "'");
    try {
      cfg.optimizer = nlohmann::json::parse(in).get<OptimizerSettings>();
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("settings file: ") + e.what());
    } catch (const ConfigurationError& e) {
      throw UsageError(std::string("settings file: ") + e.what());
    }
  }
  if (f.oracle_samples) cfg.optimizer.oracle_samples = *f.oracle_samples;
  cfg.seed = f.seed;
  cfg.output_path = f.out;
  cfg.strict = f.strict;
  cfg.json = f.format == "json";
  return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tripartite and accessible information of small isometries", "scramble"};
  app.require_subcommand(1);

  CommonFlags table_flags, sweep_flags, compute_flags;
  std::string dynamics, partition, quantity, grid = "24x24";
  std::string theta, phi;
  std::optional<double> p0;

  auto* table = app.add_subcommand("table", "Reproduce the comparison table of all quantifiers");
  add_common(table, table_flags);

  auto* sweep = app.add_subcommand("sweep", "Evaluate a quantity on a grid of encoding bases (CSV)");
  add_common(sweep, sweep_flags);
  sweep->add_option("--dynamics", dynamics, "Registry name")->required();
  sweep->add_option("--partition", partition, "Output groups, e.g. C=1;D=2");
  sweep->add_option("--quantity", quantity, "j3, Iacc_RC, Iacc_RD or Iacc_RCD");
  sweep->add_option("--grid", grid, "Grid size NxM over theta x phi");

  auto* compute = app.add_subcommand("compute", "Compute a single quantity");
  add_common(compute, compute_flags);
  compute->add_option("--dynamics", dynamics, "Registry name")->required();
  compute->add_option("--quantity", quantity, "I3, I3_acc, j3_fixed, J3_acc or Iacc")->required();
  compute->add_option("--partition", partition, "Output groups, e.g. C=1;D=2");
  compute->add_option("--theta", theta, "Encoding polar angle (radians or e.g. 5pi/6)");
  compute->add_option("--phi", phi, "Encoding azimuth (radians or e.g. 5pi/6)");
  compute->add_option("--p0", p0, "Weight of the first encoding letter");

  auto* list = app.add_subcommand("list", "List the example dynamics");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list->parsed()) return list_examples(out);
    if (table->parsed()) {
      ScenarioConfig cfg = base_config(table_flags);
      cfg.quantity = Quantity::table;
      return run_table(cfg, out, err);
    }
    if (sweep->parsed()) {
      ScenarioConfig cfg = base_config(sweep_flags);
      cfg.quantity = Quantity::sweep;
      cfg.dynamics = dynamics;
      if (!partition.empty()) cfg.partition = parse_partition(partition);
      if (!quantity.empty()) {
        const auto q = parse_sweep_quantity(quantity);
        if (!q) throw UsageError("unknown sweep quantity '" + quantity + "'");
        cfg.sweep_quantity = *q;
      }
      std::tie(cfg.grid_theta, cfg.grid_phi) = parse_grid(grid);
      return run_sweep(cfg, out, err);
    }
    ScenarioConfig cfg = base_config(compute_flags);
    cfg.dynamics = dynamics;
    cfg.quantity = parse_quantity(quantity);
    if (!partition.empty()) cfg.partition = parse_partition(partition);
    if (!theta.empty() || !phi.empty() || p0) {
      Encoding e;
      if (!theta.empty()) e.theta = parse_angle(theta);
      if (!phi.empty()) e.phi = parse_angle(phi);
      if (p0) {
        if (!(*p0 >= 0.0 && *p0 <= 1.0)) throw UsageError("--p0 must lie in [0, 1]");
        e.p0 = *p0;
      }
      cfg.encoding = e;
    }
    return run_compute(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace scramble::cli
