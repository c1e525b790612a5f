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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scramble/tensor.hpp"

namespace scramble {

/// Labels of the diagnostic states.
inline const std::string kRegisterLabel = "R";
inline const std::string kAncillaLabel = "M";

/// Feeds halves of |Psi+>_{AR} and |Psi+>_{BM} through the unitary `u` on AB
/// and traces out M. The result lives on [R, C, D], where C and D are u's
/// first and second output subsystems.
DensityMatrix double_arm_state(const Isometry& u);

/// I3(R:C:D) of double_arm_state(u).
double double_arm_tripartite_info(const Isometry& u);

/// (V (x) I_R)|Psi+>_{AR} with layout [outputs..., R].
///
/// `v` is either an isometry on a single input subsystem A, or a unitary on
/// [A, B] whose B input is fixed to `fixed_b`.
Ket single_arm_state(const Isometry& v, const std::optional<Ket>& fixed_b = std::nullopt);

/// V = U (I_A (x) |b>_B) for a generator with inputs [A, B].
Isometry isometry_from_unitary(const Isometry& u, const Ket& fixed_b);

/// I3(R:C:D) of the single-arm state with every other output traced out.
double single_arm_tripartite_info(const Isometry& v, const LabelSet& c, const LabelSet& d,
                                  const std::optional<Ket>& fixed_b = std::nullopt);

/// U|i>|j> = |i+j mod d>|i-j mod d> for odd d >= 3; inputs [A, B], outputs [1, 2].
Isometry perfect_tensor_unitary(std::size_t d);

/// CNOT with A as control; inputs [A, B], outputs [1, 2].
Isometry cnot_unitary();

struct ExampleDynamics {
  std::string name;
  /// Action on the computational input basis, for listings.
  std::string definition;
  Isometry generator;
  /// Output label -> role (C, D or E).
  std::map<std::string, std::string> role_labels;

  LabelSet labels_with_role(std::string_view role) const;
};

/// The fixed catalogue: "van", "pos", "neg", "W3" and "perfect-tensor-3".
const std::vector<ExampleDynamics>& example_registry();

/// Looks up a registry name; "perfect-tensor-<d>" builds any odd d.
/// Throws RegistryError for unknown names.
ExampleDynamics find_example(std::string_view name);

struct CatalogueEntry {
  std::string name;
  std::string input_dims;
  std::string output_dims;
  std::string definition;
};

/// Registry listing with the parameterized family shown by its pattern.
std::vector<CatalogueEntry> example_catalogue();

}  // namespace scramble
