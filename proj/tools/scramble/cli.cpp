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

#include "scramble/cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <regex>
#include <sstream>

#include <fmt/format.h>

#include "scramble/accessible_info.hpp"
#include "scramble/info_measures.hpp"
#include "scramble/random.hpp"
#include "scramble/scrambling_states.hpp"

namespace scramble::cli {

using nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

double parse_number(std::string_view text, const char* what) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw UsageError(fmt::format("invalid {} '{}'", what, text));
  }
  return v;
}

std::string join(const LabelSet& labels, const char* sep = ",") {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : sep) + l;
  return out;
}

std::string group_key(const LabelSet& labels) { return "R:" + join(labels, ""); }

// Accumulates flags and hands out oracle streams in a fixed order.
struct Report {
  const OptimizerSettings& settings;
  std::uint64_t next_stream = 0;
  bool all_converged = true;
  bool all_oracles_passed = true;

  ordered_json oracle(const AccessibleInfo& info) {
    const std::uint64_t stream = next_stream++;
    if (settings.oracle_samples == 0) return {{"status", "skipped"}};
    const OracleReport r = check_with_oracle(info, settings, stream);
    all_oracles_passed = all_oracles_passed && r.passed;
    return {{"status", r.passed ? "passed" : "failed"},
            {"samples", r.samples},
            {"best_sampled", r.best_sampled},
            {"margin", r.margin}};
  }

  ordered_json measured(const AccessibleInfo& info) {
    all_converged = all_converged && info.converged;
    ordered_json j;
    j["value"] = info.value;
    j["converged"] = info.converged;
    j["saturated"] = info.saturated;
    j["measurement"] = {{"labels", info.measurement.layout().labels()}, {"parameters", info.measurement.parameters()}};
    j["oracle"] = oracle(info);
    return j;
  }
};

ordered_json encoding_json(const EncodingBasis& b) { return {{"theta", b.theta()}, {"phi", b.phi()}}; }

bool flagged(const ordered_json& node) {
  if (node.is_object()) {
    if (node.contains("converged") && node["converged"].is_boolean() && !node["converged"].get<bool>()) return true;
    if (node.contains("oracle") && node["oracle"].value("status", "") == "failed") return true;
    for (const auto& [k, v] : node.items()) {
      if (flagged(v)) return true;
    }
  } else if (node.is_array()) {
    for (const auto& v : node) {
      if (flagged(v)) return true;
    }
  }
  return false;
}

ExampleDynamics resolve(const std::string& name) {
  try {
    return find_example(name);
  } catch (const RegistryError& e) {
    throw UsageError(e.what());
  }
}

void check_partition(const ExampleDynamics& ex, const Partition& p, bool need_d) {
  const auto& out = ex.generator.output_layout();
  if (p.c.empty()) throw UsageError("partition needs a C group");
  if (need_d && p.d.empty()) throw UsageError("partition needs a D group");
  for (const auto& group : {p.c, p.d}) {
    for (const auto& l : group) {
      if (!out.contains(l)) throw UsageError(fmt::format("'{}' is not an output of {} (outputs: {})", l, ex.name, join(out.labels())));
    }
  }
  try {
    require_disjoint({p.c, p.d});
  } catch (const PartitionError& e) {
    throw UsageError(e.what());
  }
}

void require_qubit_input(const ExampleDynamics& ex) {
  if (ex.generator.input_layout().total_dim() != 2) {
    throw UsageError(fmt::format("{} does not have a single-qubit input", ex.name));
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError(fmt::format("cannot open '{}' for writing", path));
  f << content;
  f.flush();
  if (!f) throw IoError(fmt::format("failed writing '{}'", path));
}

// Fails before any long computation starts.
void check_writable(const std::string& path) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary | std::ios::app);
  if (!f) throw IoError(fmt::format("cannot open '{}' for writing", path));
}

OptimizerSettings settings_of(const ScenarioConfig& cfg) {
  OptimizerSettings s = cfg.optimizer;
  s.seed = cfg.seed;
  return s;
}

// Three decimals without a "-0.000".
std::string cell(double v, bool flag) { return fmt::format("{:>9.3f}{}", std::abs(v) < 5e-4 ? 0.0 : v, flag ? "*" : " "); }

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace

// ---- parsing ----

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::I3: return "I3";
    case Quantity::I3_acc: return "I3_acc";
    case Quantity::j3_fixed: return "j3_fixed";
    case Quantity::J3_acc: return "J3_acc";
    case Quantity::Iacc: return "Iacc";
    case Quantity::sweep: return "sweep";
    case Quantity::table: return "table";
  }
  return "?";
}

Quantity parse_quantity(std::string_view text) {
  static const std::map<std::string, Quantity> names = {
      {"i3", Quantity::I3},         {"i3_acc", Quantity::I3_acc}, {"j3_fixed", Quantity::j3_fixed},
      {"j3_acc", Quantity::J3_acc}, {"iacc", Quantity::Iacc},     {"sweep", Quantity::sweep},
      {"table", Quantity::table}};
  const auto it = names.find(lower(trim(text)));
  if (it == names.end()) throw UsageError(fmt::format("unknown quantity '{}'", text));
  return it->second;
}

Partition parse_partition(std::string_view text) {
  Partition p;
  bool seen_c = false, seen_d = false;
  std::stringstream ss{std::string(text)};
  std::string part;
  while (std::getline(ss, part, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError(fmt::format("partition group '{}' lacks '='", part));
    const std::string role = trim(std::string_view(part).substr(0, eq));
    LabelSet labels;
    std::stringstream ls{part.substr(eq + 1)};
    std::string label;
    while (std::getline(ls, label, ',')) {
      label = trim(label);
      if (label.empty()) throw UsageError(fmt::format("empty label in partition '{}'", text));
      labels.push_back(label);
    }
    if (labels.empty()) throw UsageError(fmt::format("partition group '{}' is empty", role));
    if (role == "C" && !seen_c) {
      p.c = labels;
      seen_c = true;
    } else if (role == "D" && !seen_d) {
      p.d = labels;
      seen_d = true;
    } else {
      throw UsageError(fmt::format("unexpected partition group '{}' (expected C and D once each)", role));
    }
  }
  if (!seen_c) throw UsageError("partition needs a C group, e.g. C=1;D=2");
  try {
    require_disjoint({p.c, p.d});
  } catch (const PartitionError& e) {
    throw UsageError(fmt::format("partition '{}': {}", text, e.what()));
  }
  return p;
}

double parse_angle(std::string_view text) {
  static const std::regex pi_form(R"(^\s*([+-]?)\s*([0-9]*\.?[0-9]*)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)",
                                  std::regex::icase);
  const std::string t(text);
  std::smatch m;
  if (std::regex_match(t, m, pi_form)) {
    double factor = m[2].length() ? parse_number(m[2].str(), "angle") : 1.0;
    if (m[3].matched) {
      const double den = parse_number(m[3].str(), "angle");
      if (den == 0.0) throw UsageError(fmt::format("invalid angle '{}'", text));
      factor /= den;
    }
    return (m[1].str() == "-" ? -1.0 : 1.0) * factor * std::numbers::pi;
  }
  return parse_number(text, "angle");
}

std::pair<std::size_t, std::size_t> parse_grid(std::string_view text) {
  const std::string t = lower(trim(text));
  const auto x = t.find('x');
  if (x == std::string::npos) throw UsageError(fmt::format("grid '{}' is not of the form NxM", text));
  auto count = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 2) {
      throw UsageError(fmt::format("grid '{}' needs integers >= 2", text));
    }
    return v;
  };
  const std::string_view sv(t);
  return {count(sv.substr(0, x)), count(sv.substr(x + 1))};
}

// ---- table ----

ordered_json table_document(const ScenarioConfig& cfg) {
  const OptimizerSettings s = settings_of(cfg);
  Report report{s};
  ordered_json doc;
  doc["command"] = "table";
  doc["seed"] = cfg.seed;
  doc["optimizer"] = s;

  const std::array<std::pair<const char*, const char*>, 3> pairs = {{{"1", "2"}, {"1", "3"}, {"2", "3"}}};
  ordered_json rows = ordered_json::array();
  for (const char* name : {"van", "pos", "neg", "W3"}) {
    const ExampleDynamics ex = find_example(name);
    const Isometry& v = ex.generator;
    const InducedChannel channel(v);
    ordered_json row;
    row["dynamics"] = ex.name;
    row["definition"] = ex.definition;

    ordered_json i3;
    double first = 0.0;
    double spread = 0.0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const double value = single_arm_tripartite_info(v, {pairs[k].first}, {pairs[k].second});
      if (k == 0) first = value;
      spread = std::max(spread, std::abs(value - first));
      i3[fmt::format("R:{}:{}", pairs[k].first, pairs[k].second)] = value;
    }
    row["I3"] = {{"value", first}, {"by_pair", i3}, {"pairs_agree", spread <= kArithmeticTolerance}};

    // Channel accessible informations, each optimized once.
    std::map<std::string, ChannelAccessibleInfo> iacc;
    ordered_json iacc_json;
    for (const LabelSet& group : std::vector<LabelSet>{{"1"}, {"2"}, {"3"}, {"1", "2"}, {"1", "3"}, {"2", "3"}}) {
      const ChannelAccessibleInfo r = accessible_info_channel(channel, group, s);
      report.all_converged = report.all_converged && r.converged;
      ordered_json j = report.measured(r.at_optimum);
      j["value"] = r.value;
      j["converged"] = r.converged;
      j["encoding"] = encoding_json(r.encoding);
      j["weights"] = r.weights;
      iacc_json[group_key(group)] = j;
      iacc.emplace(group_key(group), r);
    }
    row["I_acc"] = iacc_json;

    ordered_json i3acc = ordered_json::array();
    ordered_json j3acc = ordered_json::array();
    for (const auto& [a, b] : pairs) {
      const std::string kc = group_key({a}), kd = group_key({b}), kcd = group_key({a, b});
      const double value = iacc.at(kc).value + iacc.at(kd).value - iacc.at(kcd).value;
      const bool converged = iacc.at(kc).converged && iacc.at(kd).converged && iacc.at(kcd).converged;
      i3acc.push_back({{"pair", fmt::format("R:{}:{}", a, b)},
                       {"value", value},
                       {"converged", converged},
                       {"summands", {kc, kd, kcd}},
                       {"oracle_passed", !flagged(iacc_json[kc]) && !flagged(iacc_json[kd]) && !flagged(iacc_json[kcd])}});

      const J3Optimum j3 = j3_acc_optimized(v, {a}, {b}, s);
      report.all_converged = report.all_converged && j3.converged;
      ordered_json cellj;
      cellj["pair"] = fmt::format("R:{}:{}", a, b);
      cellj["value"] = j3.value;
      cellj["converged"] = j3.converged;
      cellj["encoding"] = encoding_json(j3.encoding);
      cellj["weights"] = j3.weights;
      cellj["summands"] = {{kc, report.measured(j3.summands.rc)},
                           {kd, report.measured(j3.summands.rd)},
                           {kcd, report.measured(j3.summands.rcd)}};
      j3acc.push_back(cellj);
    }
    row["I3_acc"] = i3acc;
    row["J3_acc"] = j3acc;
    rows.push_back(row);
  }
  doc["rows"] = rows;
  doc["status"] = {{"all_converged", report.all_converged}, {"all_oracles_passed", report.all_oracles_passed}};
  return doc;
}

int run_table(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_writable(cfg.output_path);
    const ordered_json doc = table_document(cfg);
    if (!cfg.output_path.empty()) write_file(cfg.output_path, doc.dump(2) + "\n");
    if (cfg.json) {
      out << doc.dump(2) << "\n";
    } else {
      out << fmt::format("{:<10}{:>10}{:>15}{:>15}{:>15}{:>15}{:>15}{:>15}\n", "isometry", "I3", "I3acc(R:1:2)",
                         "I3acc(R:1:3)", "I3acc(R:2:3)", "J3acc(R:1:2)", "J3acc(R:1:3)", "J3acc(R:2:3)");
      for (const auto& row : doc["rows"]) {
        std::string line = fmt::format("{:<10}", row["dynamics"].get<std::string>());
        line += cell(row["I3"]["value"].get<double>(), !row["I3"]["pairs_agree"].get<bool>());
        for (const auto& c : row["I3_acc"]) {
          line += "     " + cell(c["value"].get<double>(), !c["converged"].get<bool>() || !c["oracle_passed"].get<bool>());
        }
        for (const auto& c : row["J3_acc"]) line += "     " + cell(c["value"].get<double>(), flagged(c));
        out << line << "\n";
      }
      out << "\nJ3acc maximizing encodings (theta, phi):\n";
      for (const auto& row : doc["rows"]) {
        std::string line = fmt::format("  {:<8}", row["dynamics"].get<std::string>());
        for (const auto& c : row["J3_acc"]) {
          line += fmt::format("  {} ({:.4f}, {:.4f})", c["pair"].get<std::string>(), c["encoding"]["theta"].get<double>(),
                              c["encoding"]["phi"].get<double>());
        }
        out << line << "\n";
      }
      const auto& st = doc["status"];
      out << fmt::format("\nconverged: {}  oracle: {}  (* marks a flagged cell)\n",
                         st["all_converged"].get<bool>() ? "yes" : "no",
                         cfg.optimizer.oracle_samples == 0 ? "skipped"
                         : st["all_oracles_passed"].get<bool>() ? "passed"
                                                                : "failed");
    }
    const bool ok = doc["status"]["all_converged"].get<bool>() && doc["status"]["all_oracles_passed"].get<bool>();
    return cfg.strict && !ok ? kExitNumerical : kExitOk;
  });
}

// ---- sweep ----

int run_sweep(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_writable(cfg.output_path);
    const ExampleDynamics ex = resolve(cfg.dynamics);
    require_qubit_input(ex);
    const Partition p = cfg.partition.value_or(Partition{{"1"}, {"2"}});
    check_partition(ex, p, true);
    const OptimizerSettings s = settings_of(cfg);
    const SweepResult r = basis_sweep(ex.generator, p.c, p.d, cfg.grid_theta, cfg.grid_phi, cfg.sweep_quantity, s);

    std::ostringstream csv;
    write_sweep_csv(r, csv);
    std::size_t flagged_cells = 0;
    for (const auto& row : r.converged) flagged_cells += static_cast<std::size_t>(std::count(row.begin(), row.end(), false));
    if (cfg.output_path.empty()) {
      out << csv.str();
    } else {
      write_file(cfg.output_path, csv.str());
      out << fmt::format("{} {} {} on {}x{}: max {:.10g} at theta={:.10g} phi={:.10g}; {} unconverged cell(s)\n", ex.name,
                         r.quantity_tag, r.partition_tag, cfg.grid_theta, cfg.grid_phi, r.max_value(),
                         r.theta_grid[r.argmax_theta], r.phi_grid[r.argmax_phi], flagged_cells);
    }
    return cfg.strict && flagged_cells > 0 ? kExitNumerical : kExitOk;
  });
}

// ---- compute ----

ordered_json compute_document(const ScenarioConfig& cfg) {
  const ExampleDynamics ex = resolve(cfg.dynamics);
  const Isometry& v = ex.generator;
  const OptimizerSettings s = settings_of(cfg);
  Report report{s};
  const Partition p = cfg.partition.value_or(Partition{{"1"}, {"2"}});

  ordered_json doc;
  doc["command"] = "compute";
  doc["quantity"] = to_string(cfg.quantity);
  doc["dynamics"] = ex.name;
  doc["partition"] = {{"C", p.c}, {"D", p.d}};
  if (cfg.encoding) {
    doc["encoding"] = {{"theta", cfg.encoding->theta}, {"phi", cfg.encoding->phi}, {"p0", cfg.encoding->p0}};
  } else {
    doc["encoding"] = nullptr;
  }
  doc["seed"] = cfg.seed;
  doc["optimizer"] = s;

  const std::string input_label = v.input_layout()[0].label;
  auto ensemble = [&] {
    const Encoding e = cfg.encoding.value_or(Encoding{});
    return ClassicalQuantumEnsemble::from_encoding(EncodingBasis(e.theta, e.phi), e.p0, input_label);
  };

  switch (cfg.quantity) {
    case Quantity::I3: {
      check_partition(ex, p, true);
      double value = 0.0;
      if (v.input_layout().size() == 2) {
        // Two-input generators use the double-arm state on [R, C, D] = [R, out0, out1].
        const LabelSet outs = v.output_layout().labels();
        if (p.c.size() != 1 || p.d.size() != 1 || outs.size() != 2) {
          throw UsageError("two-input dynamics take the partition C=<output>;D=<other output>");
        }
        value = double_arm_tripartite_info(v);
        doc["state"] = "double-arm";
      } else {
        value = single_arm_tripartite_info(v, p.c, p.d);
        doc["state"] = "single-arm";
      }
      doc["value"] = value;
      doc["converged"] = true;
      break;
    }
    case Quantity::Iacc: {
      require_qubit_input(ex);
      check_partition(ex, p, false);
      const LabelSet measured = join_labels({p.c, p.d});
      const InducedChannel channel(v);
      if (cfg.encoding) {
        const AccessibleInfo r = accessible_info_fixed_encoding(ensemble(), channel, measured, s);
        doc["result"] = report.measured(r);
        doc["value"] = r.value;
        doc["converged"] = r.converged;
      } else {
        const ChannelAccessibleInfo r = accessible_info_channel(channel, measured, s);
        ordered_json j = report.measured(r.at_optimum);
        j["encoding"] = encoding_json(r.encoding);
        j["weights"] = r.weights;
        doc["result"] = j;
        doc["value"] = r.value;
        doc["converged"] = r.converged;
        report.all_converged = report.all_converged && r.converged;
      }
      break;
    }
    case Quantity::I3_acc: {
      require_qubit_input(ex);
      check_partition(ex, p, true);
      const I3AccResult r = i3_acc(v, p.c, p.d, s);
      auto term = [&](const ChannelAccessibleInfo& t) {
        ordered_json j = report.measured(t.at_optimum);
        j["value"] = t.value;
        j["converged"] = t.converged;
        j["encoding"] = encoding_json(t.encoding);
        j["weights"] = t.weights;
        return j;
      };
      doc["summands"] = {{group_key(p.c), term(r.rc)}, {group_key(p.d), term(r.rd)}, {group_key(join_labels({p.c, p.d})), term(r.rcd)}};
      doc["value"] = r.value;
      doc["converged"] = r.converged;
      report.all_converged = report.all_converged && r.converged;
      break;
    }
    case Quantity::j3_fixed: {
      require_qubit_input(ex);
      check_partition(ex, p, true);
      const J3Summands r = j3_acc_fixed_encoding(v, p.c, p.d, ensemble(), s);
      doc["summands"] = {{group_key(p.c), report.measured(r.rc)},
                         {group_key(p.d), report.measured(r.rd)},
                         {group_key(join_labels({p.c, p.d})), report.measured(r.rcd)}};
      doc["value"] = r.value;
      doc["converged"] = r.converged;
      break;
    }
    case Quantity::J3_acc: {
      require_qubit_input(ex);
      check_partition(ex, p, true);
      const J3Optimum r = j3_acc_optimized(v, p.c, p.d, s);
      doc["argmax"] = {{"encoding", encoding_json(r.encoding)}, {"weights", r.weights}};
      doc["summands"] = {{group_key(p.c), report.measured(r.summands.rc)},
                         {group_key(p.d), report.measured(r.summands.rd)},
                         {group_key(join_labels({p.c, p.d})), report.measured(r.summands.rcd)}};
      doc["value"] = r.value;
      doc["converged"] = r.converged;
      report.all_converged = report.all_converged && r.converged;
      break;
    }
    case Quantity::sweep:
    case Quantity::table:
      throw UsageError("use the sweep or table subcommand for this quantity");
  }
  doc["status"] = {{"all_converged", report.all_converged}, {"all_oracles_passed", report.all_oracles_passed}};
  return doc;
}

int run_compute(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_writable(cfg.output_path);
    const ordered_json doc = compute_document(cfg);
    if (!cfg.output_path.empty()) write_file(cfg.output_path, doc.dump(2) + "\n");
    if (cfg.json) {
      out << doc.dump(2) << "\n";
    } else {
      out << fmt::format("{:.10g}\n", doc["value"].get<double>());
    }
    const bool ok = doc["status"]["all_converged"].get<bool>() && doc["status"]["all_oracles_passed"].get<bool>();
    return cfg.strict && !ok ? kExitNumerical : kExitOk;
  });
}

// ---- list ----

int list_examples(std::ostream& out) {
  const auto entries = example_catalogue();
  std::size_t width = 4;
  for (const auto& e : entries) width = std::max(width, e.name.size());
  out << fmt::format("{:<{}}  {:<8}  {:<10}  {}\n", "name", width, "input", "output", "definition");
  for (const auto& e : entries) {
    out << fmt::format("{:<{}}  {:<8}  {:<10}  {}\n", e.name, width, e.input_dims, e.output_dims, e.definition);
  }
  return kExitOk;
}

}  // namespace scramble::cli
