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

#include "scramble/scrambling_states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "scramble/error.hpp"
#include "scramble/info_measures.hpp"

namespace scramble {

namespace {

const LabelSet kThreeQubitOutputs{"1", "2", "3"};

std::map<std::string, std::string> default_roles(const SubsystemLayout& out) {
  static const char* roles[] = {"C", "D", "E"};
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < out.size(); ++i) m[out[i].label] = roles[std::min<std::size_t>(i, 2)];
  return m;
}

// Columns are the images of |0> and |1>, given on the 3-qubit computational basis.
Isometry qubit_to_three_qubits(const std::vector<std::pair<std::size_t, Complex>>& image0,
                               const std::vector<std::pair<std::size_t, Complex>>& image1) {
  Matrix m = Matrix::Zero(8, 2);
  for (auto [idx, amp] : image0) m(static_cast<Eigen::Index>(idx), 0) = amp;
  for (auto [idx, amp] : image1) m(static_cast<Eigen::Index>(idx), 1) = amp;
  return Isometry(std::move(m), SubsystemLayout::qubits({"A"}), SubsystemLayout::qubits(kThreeQubitOutputs));
}

ExampleDynamics make_example(std::string name, std::string definition, Isometry generator) {
  auto roles = default_roles(generator.output_layout());
  return ExampleDynamics{std::move(name), std::move(definition), std::move(generator), std::move(roles)};
}

ExampleDynamics van() {
  const double h = 1.0 / std::sqrt(2.0);
  // |000>=0, |110>=6, |010>=2, |100>=4
  return make_example("van", "|0> -> (|00>+|11>)|0>/sqrt2, |1> -> (|01>+|10>)|0>/sqrt2",
                      qubit_to_three_qubits({{0b000, h}, {0b110, h}}, {{0b010, h}, {0b100, h}}));
}

ExampleDynamics pos() {
  const double h = 1.0 / std::sqrt(2.0);
  return make_example("pos", "|0> -> (|000>+|111>)/sqrt2, |1> -> (|000>-|111>)/sqrt2",
                      qubit_to_three_qubits({{0b000, h}, {0b111, h}}, {{0b000, h}, {0b111, -h}}));
}

ExampleDynamics neg() {
  const double h = 1.0 / std::sqrt(2.0);
  return make_example("neg", "|0> -> (|000>+|111>)/sqrt2, |1> -> (|001>+|110>)/sqrt2",
                      qubit_to_three_qubits({{0b000, h}, {0b111, h}}, {{0b001, h}, {0b110, h}}));
}

ExampleDynamics w3() {
  const double t = 1.0 / std::sqrt(3.0);
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  return make_example("W3",
                      "|0> -> (|100>+|010>+|001>)/sqrt3, |1> -> (|100>+w|010>+w^2|001>)/sqrt3, w=exp(2pi i/3)",
                      qubit_to_three_qubits({{0b100, t}, {0b010, t}, {0b001, t}},
                                            {{0b100, t}, {0b010, t * w}, {0b001, t * w * w}}));
}

ExampleDynamics perfect_tensor_example(std::size_t d) {
  std::ostringstream def;
  def << "|i>|j> -> |i+j mod " << d << ">|i-j mod " << d << ">";
  return make_example("perfect-tensor-" + std::to_string(d), def.str(), perfect_tensor_unitary(d));
}

std::string dims_string(const SubsystemLayout& l) {
  std::ostringstream os;
  for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "x" : "") << l[i].dim;
  return os.str();
}

}  // namespace

LabelSet ExampleDynamics::labels_with_role(std::string_view role) const {
  LabelSet out;
  for (const auto& s : generator.output_layout().subsystems()) {
    auto it = role_labels.find(s.label);
    if (it != role_labels.end() && it->second == role) out.push_back(s.label);
  }
  return out;
}

DensityMatrix double_arm_state(const Isometry& u) {
  if (!u.is_square()) throw NotUnitaryError("double-arm state needs a unitary generator");
  const auto& in = u.input_layout();
  const auto& out = u.output_layout();
  if (in.size() != 2 || out.size() != 2) {
    throw DimensionError("double-arm state needs a generator with two input and two output subsystems");
  }
  for (const auto& l : out.labels()) {
    if (l == kRegisterLabel || l == kAncillaLabel) {
      throw LabelCollisionError("generator output label '" + l + "' is reserved");
    }
  }
  const Ket ar = maximally_entangled_state(in[0].dim, in[0].label, kRegisterLabel);
  const Ket bm = maximally_entangled_state(in[1].dim, in[1].label, kAncillaLabel);
  const Ket evolved = apply_isometry(u, tensor_product(ar, bm));
  const DensityMatrix reduced = partial_trace(projector(evolved), {kRegisterLabel, out[0].label, out[1].label});
  return permute(reduced, {kRegisterLabel, out[0].label, out[1].label}).relabeled({kRegisterLabel, "C", "D"});
}

double double_arm_tripartite_info(const Isometry& u) {
  return tripartite_info(double_arm_state(u), {kRegisterLabel}, {"C"}, {"D"});
}

Isometry isometry_from_unitary(const Isometry& u, const Ket& fixed_b) {
  const auto& in = u.input_layout();
  if (in.size() != 2) throw ConfigurationError("fixed input state needs a generator with inputs [A, B]");
  if (fixed_b.layout().size() != 1 || fixed_b.dim() != in[1].dim) {
    throw DimensionError("fixed input state must live on one subsystem of dimension " + std::to_string(in[1].dim));
  }
  const auto da = static_cast<Eigen::Index>(in[0].dim);
  const Matrix embed = detail::kron(Matrix::Identity(da, da), fixed_b.amplitudes());
  return Isometry(u.matrix() * embed, in.select({in[0].label}), u.output_layout());
}

Ket single_arm_state(const Isometry& v, const std::optional<Ket>& fixed_b) {
  const auto& in = v.input_layout();
  if (in.size() == 2) {
    if (!fixed_b) throw ConfigurationError("a generator on [A, B] needs a fixed input state for B");
    return single_arm_state(isometry_from_unitary(v, *fixed_b));
  }
  if (in.size() != 1) throw ConfigurationError("single-arm state needs one input subsystem (or two with a fixed B)");
  if (fixed_b) throw ConfigurationError("fixed input state given for a generator with a single input");
  const Ket ar = maximally_entangled_state(in[0].dim, in[0].label, kRegisterLabel);
  return apply_isometry(v, ar);
}

double single_arm_tripartite_info(const Isometry& v, const LabelSet& c, const LabelSet& d,
                                  const std::optional<Ket>& fixed_b) {
  const Ket psi = single_arm_state(v, fixed_b);
  const DensityMatrix rho = partial_trace(projector(psi), join_labels({{kRegisterLabel}, c, d}));
  return tripartite_info(rho, {kRegisterLabel}, c, d);
}

Isometry perfect_tensor_unitary(std::size_t d) {
  if (d < 3 || d % 2 == 0) throw DomainError("perfect-tensor unitary is defined for odd d >= 3");
  const auto n = static_cast<Eigen::Index>(d * d);
  Matrix u = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t sum = (i + j) % d;
      const std::size_t diff = (i + d - j) % d;
      u(static_cast<Eigen::Index>(sum * d + diff), static_cast<Eigen::Index>(i * d + j)) = 1.0;
    }
  }
  return Isometry(std::move(u), SubsystemLayout{{"A", d}, {"B", d}}, SubsystemLayout{{"1", d}, {"2", d}});
}

Isometry cnot_unitary() {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = u(1, 1) = u(3, 2) = u(2, 3) = 1.0;
  return Isometry(std::move(u), SubsystemLayout::qubits({"A", "B"}), SubsystemLayout::qubits({"1", "2"}));
}

const std::vector<ExampleDynamics>& example_registry() {
  static const std::vector<ExampleDynamics> registry{van(), pos(), neg(), w3(), perfect_tensor_example(3)};
  return registry;
}

ExampleDynamics find_example(std::string_view name) {
  for (const auto& e : example_registry()) {
    if (e.name == name) return e;
  }
  constexpr std::string_view prefix = "perfect-tensor-";
  if (name.starts_with(prefix)) {
    const std::string digits(name.substr(prefix.size()));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 6) {
      try {
        return perfect_tensor_example(std::stoul(digits));
      } catch (const DomainError& e) {
        throw RegistryError("'" + std::string(name) + "': " + e.what());
      }
    }
  }
  throw RegistryError("unknown dynamics '" + std::string(name) + "'");
}

std::vector<CatalogueEntry> example_catalogue() {
  std::vector<CatalogueEntry> out;
  for (const auto& e : example_registry()) {
    if (e.name.starts_with("perfect-tensor-")) continue;
    out.push_back({e.name, dims_string(e.generator.input_layout()), dims_string(e.generator.output_layout()),
                   e.definition});
  }
  out.push_back({"perfect-tensor-d (d odd)", "dxd", "dxd", "|i>|j> -> |i+j mod d>|i-j mod d>"});
  return out;
}

}  // namespace scramble
