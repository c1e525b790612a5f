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

#include "scramble/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "scramble/error.hpp"
#include "scramble/parallel.hpp"
#include "scramble/random.hpp"

namespace scramble {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string group_tag(const LabelSet& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l;
  return out;
}

}  // namespace

std::string to_string(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::j3: return "j3";
    case SweepQuantity::iacc_rc: return "Iacc_RC";
    case SweepQuantity::iacc_rd: return "Iacc_RD";
    case SweepQuantity::iacc_rcd: return "Iacc_RCD";
  }
  return "?";
}

std::optional<SweepQuantity> parse_sweep_quantity(std::string_view text) {
  const std::string t = lower(text);
  if (t == "j3") return SweepQuantity::j3;
  if (t == "iacc_rc") return SweepQuantity::iacc_rc;
  if (t == "iacc_rd") return SweepQuantity::iacc_rd;
  if (t == "iacc_rcd") return SweepQuantity::iacc_rcd;
  return std::nullopt;
}

bool SweepResult::all_converged() const {
  for (const auto& row : converged) {
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  }
  return true;
}

SweepResult basis_sweep(const Isometry& v, const LabelSet& c, const LabelSet& d, std::size_t n_theta,
                        std::size_t n_phi, SweepQuantity quantity, const OptimizerSettings& settings) {
  if (n_theta < 2 || n_phi < 2) throw ConfigurationError("sweep grids need at least 2 points per angle");
  settings.validate();
  require_disjoint({c, d});
  const InducedChannel channel(v);

  SweepResult r;
  r.quantity_tag = to_string(quantity);
  r.partition_tag = "C=" + group_tag(c) + ";D=" + group_tag(d);
  for (std::size_t i = 0; i < n_theta; ++i) r.theta_grid.push_back(std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_theta - 1));
  for (std::size_t j = 0; j < n_phi; ++j) r.phi_grid.push_back(std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_phi - 1));

  std::vector<double> flat(n_theta * n_phi);
  std::vector<char> ok(n_theta * n_phi);
  const std::string input_label = v.input_layout()[0].label;
  parallel_for(
      flat.size(),
      [&](std::size_t k) {
        OptimizerSettings cell = settings;
        cell.seed = derive_seed(settings.seed, k);
        const auto ens = ClassicalQuantumEnsemble::from_encoding(EncodingBasis(r.theta_grid[k / n_phi], r.phi_grid[k % n_phi]),
                                                                 0.5, input_label);
        switch (quantity) {
          case SweepQuantity::j3: {
            const auto s = j3_acc_fixed_encoding(v, c, d, ens, cell);
            flat[k] = s.value;
            ok[k] = s.converged;
            return;
          }
          case SweepQuantity::iacc_rc:
          case SweepQuantity::iacc_rd:
          case SweepQuantity::iacc_rcd: {
            const LabelSet measured = quantity == SweepQuantity::iacc_rc   ? c
                                      : quantity == SweepQuantity::iacc_rd ? d
                                                                           : join_labels({c, d});
            const auto a = accessible_info_fixed_encoding(ens, channel, measured, cell);
            flat[k] = a.value;
            ok[k] = a.converged;
            return;
          }
        }
      },
      settings.threads);

  r.values.assign(n_theta, std::vector<double>(n_phi));
  r.converged.assign(n_theta, std::vector<bool>(n_phi));
  for (std::size_t i = 0; i < n_theta; ++i) {
    for (std::size_t j = 0; j < n_phi; ++j) {
      const double value = flat[i * n_phi + j];
      if (!std::isfinite(value)) throw Error("non-finite sweep value");
      r.values[i][j] = value;
      r.converged[i][j] = ok[i * n_phi + j] != 0;
      if (value > r.values[r.argmax_theta][r.argmax_phi]) {
        r.argmax_theta = i;
        r.argmax_phi = j;
      }
    }
  }
  return r;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "theta,phi,value\n";
  for (std::size_t i = 0; i < result.theta_grid.size(); ++i) {
    for (std::size_t j = 0; j < result.phi_grid.size(); ++j) {
      out << fmt::format("{:.10g},{:.10g},{:.10g}\n", result.theta_grid[i], result.phi_grid[j], result.values[i][j]);
    }
  }
}

}  // namespace scramble
