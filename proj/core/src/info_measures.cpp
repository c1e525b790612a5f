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

#include "scramble/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scramble/error.hpp"

namespace scramble {

namespace {

constexpr double kEntropyCutoff = 1e-12;
constexpr double kDistributionTolerance = 1e-12;

double xlog2x(double x) { return x < kEntropyCutoff ? 0.0 : x * std::log2(x); }

std::vector<std::size_t> variable_indices(const LabelSet& labels, const LabelSet& wanted) {
  std::vector<std::size_t> out;
  for (const auto& w : wanted) {
    auto it = std::find(labels.begin(), labels.end(), w);
    if (it == labels.end()) throw LayoutError("unknown variable '" + w + "'");
    out.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  return out;
}

void require_present(const SubsystemLayout& layout, const std::vector<LabelSet>& groups) {
  for (const auto& g : groups) {
    if (g.empty()) throw PartitionError("partition groups must be nonempty");
    for (const auto& l : g) layout.index_of(l);
  }
  require_disjoint(groups);
}

}  // namespace

namespace detail {

double entropy_of_spectrum(const Eigen::VectorXd& spectrum) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) h -= xlog2x(spectrum(i));
  return h;
}

double reduced_entropy(const Matrix& rho, const SubsystemLayout& layout, const LabelSet& keep) {
  if (keep.empty()) return 0.0;
  return entropy_of_spectrum(clamped_spectrum(reduce(rho, layout, keep)));
}

}  // namespace detail

JointDistribution::JointDistribution(LabelSet labels, std::vector<std::size_t> alphabet_sizes,
                                     std::vector<double> table)
    : labels_(std::move(labels)), sizes_(std::move(alphabet_sizes)), table_(std::move(table)) {
  if (labels_.size() != sizes_.size()) throw DimensionError("one alphabet size per variable");
  {
    LabelSet sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw LabelCollisionError("duplicate variable label");
    }
  }
  std::size_t total = 1;
  for (auto s : sizes_) {
    if (s < 1) throw DimensionError("alphabet size must be positive");
    total *= s;
  }
  if (table_.size() != total) throw DimensionError("probability table size does not match alphabets");
  double sum = 0.0;
  for (double p : table_) {
    if (!(p >= 0.0)) throw ValidationError("probabilities must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kDistributionTolerance) {
    throw ValidationError("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

JointDistribution JointDistribution::from_bitstrings(LabelSet labels,
                                                     const std::vector<std::pair<std::string, double>>& outcomes) {
  const std::size_t n = labels.size();
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (const auto& [bits, p] : outcomes) {
    if (bits.size() != n) throw DimensionError("outcome '" + bits + "' has the wrong length");
    std::size_t idx = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw ValidationError("outcome '" + bits + "' is not a bitstring");
      idx = 2 * idx + static_cast<std::size_t>(c - '0');
    }
    table[idx] += p;
  }
  return JointDistribution(std::move(labels), std::vector<std::size_t>(n, 2), std::move(table));
}

double JointDistribution::probability(const std::vector<std::size_t>& outcome) const {
  if (outcome.size() != sizes_.size()) throw DimensionError("outcome has the wrong number of variables");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    if (outcome[i] >= sizes_[i]) throw DimensionError("outcome symbol out of range");
    idx = idx * sizes_[i] + outcome[i];
  }
  return table_[idx];
}

JointDistribution JointDistribution::marginal(const LabelSet& variables) const {
  const auto keep = variable_indices(labels_, variables);
  {
    auto sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PartitionError("variable listed twice in marginal");
    }
  }
  std::vector<std::size_t> out_sizes;
  std::size_t out_total = 1;
  for (auto k : keep) {
    out_sizes.push_back(sizes_[k]);
    out_total *= sizes_[k];
  }
  std::vector<double> out(out_total, 0.0);
  std::vector<std::size_t> digits(sizes_.size(), 0);
  for (double p : table_) {
    std::size_t idx = 0;
    for (auto k : keep) idx = idx * sizes_[k] + digits[k];
    out[idx] += p;
    for (std::size_t i = sizes_.size(); i-- > 0;) {
      if (++digits[i] < sizes_[i]) break;
      digits[i] = 0;
    }
  }
  return JointDistribution(variables, std::move(out_sizes), std::move(out));
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) h -= xlog2x(p);
  return h;
}

double shannon_entropy(const JointDistribution& p, const LabelSet& variables) {
  if (variables.empty()) return 0.0;
  const auto m = p.marginal(variables);
  return shannon_entropy(std::span<const double>(m.table()));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return detail::entropy_of_spectrum(detail::clamped_spectrum(rho.matrix()));
}

double qmi(const DensityMatrix& rho, const LabelSet& a, const LabelSet& b) {
  require_present(rho.layout(), {a, b});
  const auto& m = rho.matrix();
  const auto& layout = rho.layout();
  return detail::reduced_entropy(m, layout, a) + detail::reduced_entropy(m, layout, b) -
         detail::reduced_entropy(m, layout, join_labels({a, b}));
}

double tripartite_info(const DensityMatrix& rho, const LabelSet& a, const LabelSet& b, const LabelSet& c) {
  require_present(rho.layout(), {a, b, c});
  return qmi(rho, a, b) + qmi(rho, a, c) - qmi(rho, a, join_labels({b, c}));
}

double tripartite_info_symmetric(const DensityMatrix& rho, const LabelSet& a, const LabelSet& b,
                                 const LabelSet& c) {
  require_present(rho.layout(), {a, b, c});
  const auto& m = rho.matrix();
  const auto& layout = rho.layout();
  auto s = [&](const std::vector<LabelSet>& groups) { return detail::reduced_entropy(m, layout, join_labels(groups)); };
  return s({a}) + s({b}) + s({c}) - s({a, b}) - s({a, c}) - s({b, c}) + s({a, b, c});
}

double classical_mi(const JointDistribution& p, const LabelSet& a, const LabelSet& b) {
  if (a.empty() || b.empty()) throw PartitionError("mutual information needs nonempty variable sets");
  require_disjoint({a, b});
  return shannon_entropy(p, a) + shannon_entropy(p, b) - shannon_entropy(p, join_labels({a, b}));
}

double classical_tripartite_info(const JointDistribution& p, const LabelSet& a, const LabelSet& b,
                                 const LabelSet& c) {
  if (c.empty()) throw PartitionError("tripartite information needs nonempty variable sets");
  require_disjoint({a, b, c});
  return classical_mi(p, a, b) + classical_mi(p, a, c) - classical_mi(p, a, join_labels({b, c}));
}

JointDistribution diagonal_distribution(const DensityMatrix& rho) {
  std::vector<double> table(rho.dim());
  double sum = 0.0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = std::max(0.0, rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real());
    sum += table[i];
  }
  for (double& p : table) p /= sum;
  return JointDistribution(rho.layout().labels(), rho.layout().dims(), std::move(table));
}

}  // namespace scramble
