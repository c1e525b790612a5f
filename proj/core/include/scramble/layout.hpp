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
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scramble {

using LabelSet = std::vector<std::string>;

struct Subsystem {
  std::string label;
  std::size_t dim = 1;

  friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

/// Ordered list of labeled tensor factors.
///
/// Composite indices are row-major: subsystem 0 is the most significant
/// digit. Every partial trace, permutation and measurement in the library
/// goes through this convention.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Subsystem> subsystems);
  SubsystemLayout(std::initializer_list<Subsystem> subsystems);

  /// Layout of qubits with the given labels.
  static SubsystemLayout qubits(const LabelSet& labels);

  std::size_t size() const { return subsystems_.size(); }
  bool empty() const { return subsystems_.empty(); }
  std::size_t total_dim() const { return total_dim_; }

  const Subsystem& operator[](std::size_t i) const { return subsystems_[i]; }
  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  LabelSet labels() const;
  std::vector<std::size_t> dims() const;

  std::optional<std::size_t> find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }
  /// Throws LayoutError if the label is absent.
  std::size_t index_of(std::string_view label) const;
  std::vector<std::size_t> indices_of(const LabelSet& labels) const;

  /// Sub-layout holding `labels` in the order given.
  SubsystemLayout select(const LabelSet& labels) const;
  /// Throws LabelCollisionError on shared labels.
  SubsystemLayout concat(const SubsystemLayout& other) const;
  /// Same dimensions, new labels (positionally).
  SubsystemLayout relabeled(const LabelSet& labels) const;

  /// Row-major stride of each subsystem.
  std::vector<std::size_t> strides() const;

  std::string to_string() const;

  friend bool operator==(const SubsystemLayout& a, const SubsystemLayout& b) {
    return a.subsystems_ == b.subsystems_;
  }

 private:
  std::vector<Subsystem> subsystems_;
  std::size_t total_dim_ = 1;
};

/// Throws PartitionError unless all groups are pairwise disjoint.
void require_disjoint(const std::vector<LabelSet>& groups);

/// Concatenation of label groups.
LabelSet join_labels(const std::vector<LabelSet>& groups);

}  // namespace scramble
