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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scramble/accessible_info.hpp"
#include "scramble/channel_capacity.hpp"
#include "scramble/error.hpp"
#include "scramble/random.hpp"
#include "scramble/scrambling_states.hpp"

using namespace scramble;

namespace {

constexpr double kPi = std::numbers::pi;
const double kZCapacity = std::log2(1.0 + 2.0 / (3.0 * std::sqrt(3.0)));

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Isometry example(const char* name) { return find_example(name).generator; }

OptimizerSettings test_settings() {
  OptimizerSettings s;
  s.oracle_samples = 20000;
  return s;
}

DensityMatrix plus_state() {
  return projector(Ket::normalized((Vector(2) << 1, 1).finished(), SubsystemLayout::qubits({"A"})));
}

DensityMatrix basis_state(std::size_t k) { return projector(Ket::basis(SubsystemLayout::qubits({"A"}), {k})); }

}  // namespace

TEST(InducedChannelTest, W3FirstQubitOnPlus) {
  const InducedChannel ch(example("W3"), {"1"});
  const auto out = apply_channel(ch, plus_state());
  EXPECT_EQ(out.layout().labels(), (LabelSet{"1"}));
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 1.0 / 3;
  expected(1, 1) = 2.0 / 3;
  EXPECT_LT(max_abs(out.matrix() - expected), 1e-12);
}

TEST(InducedChannelTest, W3SecondQubitMatchesDirectTrace) {
  const auto v = example("W3");
  const InducedChannel ch(v, {"2"});
  Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    const auto rho = random_density_matrix(SubsystemLayout::qubits({"A"}), rng);
    const Matrix full = v.matrix() * rho.matrix() * v.matrix().adjoint();
    const Matrix ref = oracle::partial_trace(full, {2, 2, 2}, {1});
    EXPECT_LT(max_abs(apply_channel(ch, rho).matrix() - ref), 1e-12);
  }
}

TEST(InducedChannelTest, IdentityKeepsTheInput) {
  Rng rng(6);
  const auto rho = random_density_matrix(SubsystemLayout::qubits({"A", "B"}), rng);
  const InducedChannel ch(Isometry::identity(rho.layout()));
  EXPECT_LT(max_abs(apply_channel(ch, rho).matrix() - rho.matrix()), 1e-14);
}

TEST(InducedChannelTest, NegThirdQubitIsMaximallyMixed) {
  const InducedChannel ch(example("neg"), {"3"});
  EXPECT_LT(max_abs(apply_channel(ch, basis_state(0)).matrix() - Matrix::Identity(2, 2) / 2.0), 1e-12);
}

TEST(InducedChannelTest, OutputsAreDensityMatrices) {
  Rng rng(7);
  const InducedChannel ch(example("W3"), {"1", "3"});
  for (int t = 0; t < 10; ++t) {
    const auto out = apply_channel(ch, random_density_matrix(SubsystemLayout::qubits({"A"}), rng));
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
    for (const auto& p : eigen_decomposition(out)) EXPECT_GE(p.value, -1e-12);
  }
}

TEST(InducedChannelTest, Errors) {
  EXPECT_THROW(InducedChannel(example("W3"), {"9"}), LayoutError);
  const InducedChannel ch(example("W3"), {"1"});
  EXPECT_THROW(apply_channel(ch, projector(Ket::basis(SubsystemLayout::qubits({"B"}), {0}))), DimensionError);
}

TEST(Dephase, Examples) {
  const auto bell = projector(maximally_entangled_state(2, "A", "B"));
  const auto mu = ProjectiveMeasurement::computational(bell.layout());
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 0.5;
  EXPECT_LT(max_abs(dephase(bell, mu).matrix() - expected), 1e-15);
  const auto q = ProjectiveMeasurement::computational(SubsystemLayout::qubits({"A"}));
  EXPECT_LT(max_abs(dephase(plus_state(), q).matrix() - Matrix::Identity(2, 2) / 2.0), 1e-15);
}

TEST(Dephase, IdempotentAndPartial) {
  Rng rng(8);
  const SubsystemLayout l = SubsystemLayout::qubits({"A", "B"});
  for (int t = 0; t < 10; ++t) {
    const auto rho = random_density_matrix(l, rng);
    const ProjectiveMeasurement mu(haar_unitary(4, rng), l);
    const auto once = dephase(rho, mu);
    EXPECT_LT(max_abs(dephase(once, mu).matrix() - once.matrix()), 1e-10);
    const ProjectiveMeasurement local(haar_unitary(2, rng), l.select({"B"}));
    const auto part = dephase(rho, local);
    EXPECT_LT(max_abs(partial_trace(part, {"A"}).matrix() - partial_trace(rho, {"A"}).matrix()), 1e-12);
    EXPECT_LT(max_abs(dephase(part, local).matrix() - part.matrix()), 1e-10);
  }
}

TEST(Ensemble, ValidationAndRealizedState) {
  EXPECT_THROW(ClassicalQuantumEnsemble({0.5, 0.6}, {basis_state(0), basis_state(1)}), ValidationError);
  EXPECT_THROW(ClassicalQuantumEnsemble({0.5}, {basis_state(0), basis_state(1)}), ValidationError);
  EXPECT_THROW(ClassicalQuantumEnsemble::from_encoding(EncodingBasis::hadamard(), 1.2), ValidationError);
  const auto ens = ClassicalQuantumEnsemble::from_encoding(EncodingBasis::computational(), 0.25);
  const auto rho = ens.realized_state();
  EXPECT_EQ(rho.layout().labels(), (LabelSet{"R", "A"}));
  EXPECT_NEAR(rho.matrix()(0, 0).real(), 0.25, 1e-15);
  EXPECT_NEAR(rho.matrix()(3, 3).real(), 0.75, 1e-15);
}

TEST(JointDistributionOfOutcomes, PosIsPerfectlyCorrelated) {
  const auto ens = ClassicalQuantumEnsemble::from_encoding(EncodingBasis::hadamard());
  const InducedChannel ch(example("pos"), {"1"});
  const auto p = joint_distribution(ens, ch, {ProjectiveMeasurement::computational(ch.output_layout())});
  EXPECT_EQ(p.labels(), (LabelSet{"R", "1"}));
  EXPECT_NEAR(p.probability({0, 0}), 0.5, 1e-12);
  EXPECT_NEAR(p.probability({1, 1}), 0.5, 1e-12);
  EXPECT_NEAR(classical_mi(p, {"R"}, {"1"}), 1.0, 1e-12);
}

TEST(JointDistributionOfOutcomes, W3Conditionals) {
  const auto ens = ClassicalQuantumEnsemble::from_encoding(EncodingBasis::hadamard());
  const InducedChannel ch(example("W3"), {"1"});
  const auto p = joint_distribution(ens, ch, {ProjectiveMeasurement::computational(ch.output_layout())});
  EXPECT_NEAR(p.probability({0, 0}) / 0.5, 1.0 / 3, 1e-9);
  EXPECT_NEAR(p.probability({0, 1}) / 0.5, 2.0 / 3, 1e-9);
  EXPECT_NEAR(p.probability({1, 0}) / 0.5, 1.0, 1e-9);
  EXPECT_NEAR(p.probability({1, 1}) / 0.5, 0.0, 1e-9);
}

TEST(JointDistributionOfOutcomes, ConstantStatesCarryNoSignal) {
  Rng rng(9);
  const auto sigma = random_density_matrix(SubsystemLayout::qubits({"A"}), rng);
  const ClassicalQuantumEnsemble ens({0.3, 0.7}, {sigma, sigma});
  const InducedChannel ch(example("W3"), {"1", "2"});
  const auto p = joint_distribution(ens, ch, {ProjectiveMeasurement(haar_unitary(2, rng), ch.output_layout().select({"1"})),
                                              ProjectiveMeasurement(haar_unitary(2, rng), ch.output_layout().select({"2"}))});
  EXPECT_EQ(p.labels(), (LabelSet{"R", "1", "2"}));
  EXPECT_NEAR(classical_mi(p, {"R"}, {"1", "2"}), 0.0, 1e-12);
}

TEST(JointDistributionOfOutcomes, GroupsMustPartitionTheKeptLabels) {
  const auto ens = ClassicalQuantumEnsemble::from_encoding(EncodingBasis::hadamard());
  const InducedChannel ch(example("W3"), {"1", "2"});
  const auto l = ch.output_layout();
  const auto m1 = ProjectiveMeasurement::computational(l.select({"1"}));
  const auto m12 = ProjectiveMeasurement::computational(l);
  EXPECT_THROW(joint_distribution(ens, ch, {m1, m12}), PartitionError);
  EXPECT_THROW(joint_distribution(ens, ch, {m1}), PartitionError);
  const auto p = joint_distribution(ens, ch, {m12});
  EXPECT_EQ(p.labels(), (LabelSet{"R", "1,2"}));
}

TEST(FixedEncoding, TableExamples) {
  const auto s = test_settings();
  const auto comp = ClassicalQuantumEnsemble::from_encoding(EncodingBasis::computational());
  const auto pm = ClassicalQuantumEnsemble::from_encoding(EncodingBasis::hadamard());
  const auto neg = accessible_info_fixed_encoding(comp, InducedChannel(example("neg"), {"1"}), {"1"}, s);
  EXPECT_NEAR(neg.value, 0.0, 1e-6);
  const auto pos = accessible_info_fixed_encoding(pm, InducedChannel(example("pos"), {"2"}), {"2"}, s);
  EXPECT_NEAR(pos.value, 1.0, 1e-6);
}

TEST(FixedEncoding, W3FirstQubitIsAZChannel) {
  const auto s = test_settings();
  const InducedChannel ch(example("W3"), {"1"});
  // Balanced letters: I = h(1/3) / 2.
  const double h13 = -(1.0 / 3) * std::log2(1.0 / 3) - (2.0 / 3) * std::log2(2.0 / 3);
  const auto balanced = accessible_info_fixed_encoding(ClassicalQuantumEnsemble::from_encoding(EncodingBasis::hadamard()),
                                                       ch, {"1"}, s);
  EXPECT_NEAR(balanced.value, h13 / 2.0, 1e-6);
  // Capacity weights: |-> is the noiseless input (row 0), |+> the noisy one (row 1).
  const auto ba = blahut_arimoto(ClassicalChannel::z_channel(1.0 / 3));
  const auto ens = ClassicalQuantumEnsemble::from_encoding(EncodingBasis::hadamard(), ba.input_distribution(1));
  const auto best = accessible_info_fixed_encoding(ens, ch, {"1"}, s);
  EXPECT_NEAR(best.value, kZCapacity, 1e-6);
  EXPECT_TRUE(best.converged);
}

TEST(ChannelLevel, W3FirstQubitReachesTheZCapacity) {
  const auto r = accessible_info_channel(InducedChannel(example("W3"), {"1"}), {"1"}, test_settings());
  EXPECT_NEAR(r.value, kZCapacity, 1e-6);
  EXPECT_NEAR(r.encoding.theta(), kPi / 2, 1e-3);
  EXPECT_NEAR(r.encoding.phi(), 0.0, 1e-3);
  EXPECT_GT(std::abs(r.weights[0] - 0.5), 0.01);
  EXPECT_TRUE(r.converged);
}

TEST(ChannelLevel, GlobalMeasurementsRecoverTheBit) {
  const auto s = test_settings();
  EXPECT_NEAR(accessible_info_channel(InducedChannel(example("W3"), {"1", "2"}), {"1", "2"}, s).value, 1.0, 1e-6);
  const InducedChannel id(Isometry::identity(SubsystemLayout::qubits({"A"})));
  EXPECT_NEAR(accessible_info_channel(id, {"A"}, s).value, 1.0, 1e-9);
}

TEST(ChannelLevel, RequiresAQubitInput) {
  const InducedChannel ch(perfect_tensor_unitary(3));
  EXPECT_THROW(accessible_info_channel(ch, {"1"}, test_settings()), DimensionError);
}

TEST(I3Acc, ExamplesFromTheTable) {
  const auto s = test_settings();
  EXPECT_NEAR(i3_acc(example("van"), {"1"}, {"2"}, s).value, 1.0, 1e-3);
  EXPECT_NEAR(i3_acc(example("van"), {"1"}, {"3"}, s).value, 0.0, 1e-3);
  EXPECT_NEAR(i3_acc(example("neg"), {"1"}, {"2"}, s).value, -1.0, 1e-3);
  const auto w = i3_acc(example("W3"), {"1"}, {"2"}, s);
  EXPECT_NEAR(w.value, 2.0 * kZCapacity - 1.0, 1e-6);
  EXPECT_TRUE(w.converged);
  EXPECT_NEAR(w.value, w.rc.value + w.rd.value - w.rcd.value, 1e-15);
}

TEST(J3Acc, FixedEncodingExamples) {
  const auto s = test_settings();
  const auto pm = ClassicalQuantumEnsemble::from_encoding(EncodingBasis::hadamard());
  const auto comp = ClassicalQuantumEnsemble::from_encoding(EncodingBasis::computational());
  EXPECT_NEAR(j3_acc_fixed_encoding(example("pos"), {"1"}, {"2"}, pm, s).value, 1.0, 1e-6);
  EXPECT_NEAR(j3_acc_fixed_encoding(example("neg"), {"1"}, {"2"}, comp, s).value, 0.0, 1e-6);
  const auto w3 = ClassicalQuantumEnsemble::from_encoding(EncodingBasis(kPi / 2, 5 * kPi / 6));
  EXPECT_NEAR(j3_acc_fixed_encoding(example("W3"), {"1"}, {"2"}, w3, s).value, 0.186, 2e-3);
}

TEST(J3Acc, OptimizedVanExamples) {
  const auto s = test_settings();
  EXPECT_NEAR(j3_acc_optimized(example("van"), {"1"}, {"2"}, s).value, 1.0, 1e-3);
  EXPECT_NEAR(j3_acc_optimized(example("van"), {"1"}, {"3"}, s).value, 0.0, 1e-3);
}

TEST(Oracle, DoesNotBeatTheOptimizer) {
  const auto s = test_settings();
  const auto pm = ClassicalQuantumEnsemble::from_encoding(EncodingBasis(kPi / 3, 0.4));
  const auto info = accessible_info_fixed_encoding(pm, InducedChannel(example("W3"), {"1", "3"}), {"1", "3"}, s);
  const auto report = check_with_oracle(info, s, 1);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.samples, s.oracle_samples);
  EXPECT_LE(report.best_sampled, info.value + s.oracle_margin);
}
