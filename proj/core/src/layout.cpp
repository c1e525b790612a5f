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

#include "scramble/layout.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "scramble/error.hpp"

namespace scramble {

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
  std::set<std::string_view> seen;
  for (const auto& s : subsystems_) {
    if (s.label.empty()) throw LayoutError("subsystem label must be nonempty");
    if (s.dim < 1) throw DimensionError("subsystem '" + s.label + "' has dimension 0");
    if (!seen.insert(s.label).second) {
      throw LabelCollisionError("duplicate subsystem label '" + s.label + "'");
    }
    total_dim_ *= s.dim;
  }
}

SubsystemLayout::SubsystemLayout(std::initializer_list<Subsystem> subsystems)
    : SubsystemLayout(std::vector<Subsystem>(subsystems)) {}

SubsystemLayout SubsystemLayout::qubits(const LabelSet& labels) {
  std::vector<Subsystem> subs;
  subs.reserve(labels.size());
  for (const auto& l : labels) subs.push_back({l, 2});
  return SubsystemLayout(std::move(subs));
}

LabelSet SubsystemLayout::labels() const {
  LabelSet out;
  out.reserve(subsystems_.size());
  for (const auto& s : subsystems_) out.push_back(s.label);
  return out;
}

std::vector<std::size_t> SubsystemLayout::dims() const {
  std::vector<std::size_t> out;
  out.reserve(subsystems_.size());
  for (const auto& s : subsystems_) out.push_back(s.dim);
  return out;
}

std::optional<std::size_t> SubsystemLayout::find(std::string_view label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t SubsystemLayout::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw LayoutError("unknown subsystem label '" + std::string(label) + "' in layout " + to_string());
}

std::vector<std::size_t> SubsystemLayout::indices_of(const LabelSet& labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index_of(l));
  return out;
}

SubsystemLayout SubsystemLayout::select(const LabelSet& labels) const {
  std::vector<Subsystem> subs;
  subs.reserve(labels.size());
  for (const auto& l : labels) subs.push_back(subsystems_[index_of(l)]);
  return SubsystemLayout(std::move(subs));
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& other) const {
  std::vector<Subsystem> subs = subsystems_;
  subs.insert(subs.end(), other.subsystems_.begin(), other.subsystems_.end());
  return SubsystemLayout(std::move(subs));
}

SubsystemLayout SubsystemLayout::relabeled(const LabelSet& labels) const {
  if (labels.size() != subsystems_.size()) {
    throw LayoutError("relabeling needs " + std::to_string(subsystems_.size()) + " labels");
  }
  std::vector<Subsystem> subs = subsystems_;
  for (std::size_t i = 0; i < subs.size(); ++i) subs[i].label = labels[i];
  return SubsystemLayout(std::move(subs));
}

std::vector<std::size_t> SubsystemLayout::strides() const {
  std::vector<std::size_t> out(subsystems_.size(), 1);
  for (std::size_t i = subsystems_.size(); i-- > 1;) out[i - 1] = out[i] * subsystems_[i].dim;
  return out;
}

std::string SubsystemLayout::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (i) os << ", ";
    os << subsystems_[i].label << ':' << subsystems_[i].dim;
  }
  os << ']';
  return os.str();
}

void require_disjoint(const std::vector<LabelSet>& groups) {
  std::set<std::string> seen;
  for (const auto& g : groups) {
    for (const auto& l : g) {
      if (!seen.insert(l).second) throw PartitionError("label '" + l + "' appears in more than one group");
    }
  }
}

LabelSet join_labels(const std::vector<LabelSet>& groups) {
  LabelSet out;
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

}  // namespace scramble
