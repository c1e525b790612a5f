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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scramble/error.hpp"
#include "scramble/random.hpp"
#include "scramble/scrambling_states.hpp"
#include "scramble/tensor.hpp"

using namespace scramble;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Ket qubit_ket(const std::string& label, std::size_t digit) { return Ket::basis(SubsystemLayout::qubits({label}), {digit}); }

}  // namespace

TEST(TensorProduct, BasisKets) {
  const Ket k = tensor_product(qubit_ket("A", 0), qubit_ket("B", 1));
  EXPECT_EQ(k.layout().labels(), (LabelSet{"A", "B"}));
  Vector expected = Vector::Zero(4);
  expected(1) = 1.0;
  EXPECT_LT((k.amplitudes() - expected).norm(), 1e-15);
}

TEST(TensorProduct, MaximallyMixedFactors) {
  const auto a = DensityMatrix::maximally_mixed(SubsystemLayout::qubits({"A"}));
  const auto b = DensityMatrix::maximally_mixed(SubsystemLayout::qubits({"B"}));
  const auto ab = tensor_product(a, b);
  EXPECT_LT(max_abs(ab.matrix() - Matrix::Identity(4, 4) / 4.0), 1e-15);
}

TEST(TensorProduct, TwoBellPairsMatchExplicitKronecker) {
  const Ket ar = maximally_entangled_state(2, "A", "R");
  const Ket bm = maximally_entangled_state(2, "B", "M");
  const Ket k = tensor_product(ar, bm);
  EXPECT_EQ(k.layout().labels(), (LabelSet{"A", "R", "B", "M"}));
  const Matrix ref = oracle::kron(ar.amplitudes(), bm.amplitudes());
  EXPECT_LT((k.amplitudes() - ref.col(0)).norm(), 1e-15);
  EXPECT_EQ(k.dim(), 16u);
}

TEST(TensorProduct, LabelCollision) {
  EXPECT_THROW(tensor_product(qubit_ket("A", 0), qubit_ket("A", 1)), LabelCollisionError);
}

TEST(PartialTrace, BellPairGivesMaximallyMixed) {
  const auto rho = projector(maximally_entangled_state(2, "A", "B"));
  EXPECT_LT(max_abs(partial_trace(rho, {"A"}).matrix() - Matrix::Identity(2, 2) / 2.0), 1e-15);
}

TEST(PartialTrace, ProductStateFactorizes) {
  Rng rng(3);
  const auto a = random_density_matrix(SubsystemLayout{{"A", 2}}, rng);
  const auto b = random_density_matrix(SubsystemLayout{{"B", 3}}, rng);
  const auto ab = tensor_product(a, b);
  EXPECT_LT(max_abs(partial_trace(ab, {"A"}).matrix() - a.matrix()), 1e-14);
  EXPECT_LT(max_abs(partial_trace(ab, {"B"}).matrix() - b.matrix()), 1e-14);
}

TEST(PartialTrace, MatchesDigitEnumerationOracle) {
  Rng rng(11);
  const SubsystemLayout l{{"A", 2}, {"B", 3}, {"C", 2}, {"D", 2}};
  const auto rho = random_density_matrix(l, rng);
  const std::vector<std::pair<LabelSet, std::vector<std::size_t>>> cases = {
      {{"A"}, {0}}, {{"B", "D"}, {1, 3}}, {{"A", "C", "D"}, {0, 2, 3}}, {{"B"}, {1}}};
  for (const auto& [labels, pos] : cases) {
    const Matrix ref = oracle::partial_trace(rho.matrix(), l.dims(), pos);
    EXPECT_LT(max_abs(partial_trace(rho, labels).matrix() - ref), 1e-14);
  }
}

TEST(PartialTrace, DoubleArmCdMarginalIsMaximallyMixed) {
  const auto rho = double_arm_state(perfect_tensor_unitary(3));
  const auto cd = partial_trace(rho, {"C", "D"});
  EXPECT_LT(max_abs(cd.matrix() - Matrix::Identity(9, 9) / 9.0), 1e-12);
}

TEST(PartialTrace, UnknownLabel) {
  const auto rho = projector(maximally_entangled_state(2, "A", "B"));
  EXPECT_THROW(partial_trace(rho, {"Z"}), LayoutError);
}

TEST(Projector, BasisAndPlus) {
  const auto p0 = projector(qubit_ket("A", 0));
  EXPECT_LT(max_abs(p0.matrix() - (Matrix(2, 2) << 1, 0, 0, 0).finished()), 1e-15);
  const auto plus = projector(Ket::normalized((Vector(2) << 1, 1).finished(), SubsystemLayout::qubits({"A"})));
  EXPECT_LT(max_abs(plus.matrix() - Matrix::Constant(2, 2, 0.5)), 1e-15);
}

TEST(Projector, GhzHasFourHalfEntries) {
  const Vector ghz = oracle::bits_ket(3, {{"000", 1.0}, {"111", 1.0}});
  const auto p = projector(Ket(ghz, SubsystemLayout::qubits({"1", "2", "3"})));
  int halves = 0, others = 0;
  for (Eigen::Index i = 0; i < 8; ++i) {
    for (Eigen::Index j = 0; j < 8; ++j) {
      const double v = std::abs(p.matrix()(i, j));
      if (std::abs(v - 0.5) < 1e-15) ++halves;
      else if (v > 1e-15) ++others;
    }
  }
  EXPECT_EQ(halves, 4);
  EXPECT_EQ(others, 0);
  EXPECT_LT(max_abs(p.matrix() * p.matrix() - p.matrix()), 1e-15);
}

TEST(MaximallyEntangled, QubitAndQutrit) {
  const Ket k2 = maximally_entangled_state(2, "A", "B");
  EXPECT_LT((k2.amplitudes() - oracle::bits_ket(2, {{"00", 1.0}, {"11", 1.0}})).norm(), 1e-15);
  const Ket k3 = maximally_entangled_state(3, "A", "B");
  Vector ref = Vector::Zero(9);
  ref(0) = ref(4) = ref(8) = 1.0 / std::sqrt(3.0);
  EXPECT_LT((k3.amplitudes() - ref).norm(), 1e-15);
  EXPECT_LT(max_abs(partial_trace(projector(k3), {"B"}).matrix() - Matrix::Identity(3, 3) / 3.0), 1e-15);
  EXPECT_THROW(maximally_entangled_state(1, "A", "B"), DimensionError);
}

TEST(ApplyIsometry, IdentityLeavesStateUnchanged) {
  Rng rng(5);
  const auto rho = random_density_matrix(SubsystemLayout::qubits({"A", "B"}), rng);
  const auto out = apply_isometry(Isometry::identity(rho.layout()), rho);
  EXPECT_LT(max_abs(out.matrix() - rho.matrix()), 1e-15);
}

TEST(ApplyIsometry, VanOnZero) {
  const auto v = find_example("van").generator;
  const Ket out = apply_isometry(v, qubit_ket("A", 0));
  EXPECT_EQ(out.layout().labels(), (LabelSet{"1", "2", "3"}));
  EXPECT_LT((out.amplitudes() - oracle::bits_ket(3, {{"000", 1.0}, {"110", 1.0}})).norm(), 1e-15);
}

TEST(ApplyIsometry, PerfectTensorCopiesWithZeroSecondInput) {
  const auto u = perfect_tensor_unitary(3);
  const SubsystemLayout in{{"A", 3}, {"B", 3}};
  const Ket out = apply_isometry(u, Ket::basis(in, {1, 0}));
  EXPECT_LT((out.amplitudes() - Ket::basis(u.output_layout(), {1, 1}).amplitudes()).norm(), 1e-15);
}

TEST(ApplyIsometry, PadsIdentityOnUntouchedSubsystems) {
  const auto v = find_example("pos").generator;
  const Ket in = tensor_product(qubit_ket("X", 1), qubit_ket("A", 0));
  const Ket out = apply_isometry(v, in);
  EXPECT_EQ(out.layout().labels(), (LabelSet{"X", "1", "2", "3"}));
  const Vector ref = oracle::kron(qubit_ket("X", 1).amplitudes(), oracle::bits_ket(3, {{"000", 1.0}, {"111", 1.0}})).col(0);
  EXPECT_LT((out.amplitudes() - ref).norm(), 1e-15);
}

TEST(ApplyIsometry, LayoutMismatch) {
  const auto v = find_example("pos").generator;
  EXPECT_THROW(apply_isometry(v, qubit_ket("Q", 0)), DimensionError);
  const SubsystemLayout qutrit{{"A", 3}};
  EXPECT_THROW(apply_isometry(v, Ket::basis(qutrit, {0})), DimensionError);
}

TEST(Isometry, ValidatesColumnsAndShape) {
  Matrix bad(4, 2);
  bad << 1, 0, 0, 1, 0, 1, 0, 0;
  EXPECT_THROW(Isometry(bad, SubsystemLayout::qubits({"A"}), SubsystemLayout::qubits({"1", "2"})), ValidationError);
  EXPECT_THROW(Isometry(Matrix::Identity(2, 4), SubsystemLayout::qubits({"A", "B"}), SubsystemLayout::qubits({"1"})),
               DimensionError);
}

TEST(DensityMatrix, Validation) {
  const auto q = SubsystemLayout::qubits({"A"});
  EXPECT_THROW(DensityMatrix::from_rows({{0.5, 0.1}, {0.0, 0.5}}, q), ValidationError);
  EXPECT_THROW(DensityMatrix::from_rows({{0.6, 0.0}, {0.0, 0.5}}, q), ValidationError);
  EXPECT_THROW(DensityMatrix::from_rows({{1.5, 0.0}, {0.0, -0.5}}, q), ValidationError);
  EXPECT_NO_THROW(DensityMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}, q));
  EXPECT_THROW(Ket((Vector(2) << 1, 1).finished(), q), ValidationError);
}

TEST(EigenDecomposition, SimpleSpectra) {
  const auto q = SubsystemLayout::qubits({"A"});
  const auto mixed = eigen_decomposition(DensityMatrix::maximally_mixed(q));
  EXPECT_NEAR(mixed[0].value, 0.5, 1e-15);
  EXPECT_NEAR(mixed[1].value, 0.5, 1e-15);
  const auto pure = eigen_decomposition(projector(qubit_ket("A", 1)));
  EXPECT_NEAR(pure[0].value, 1.0, 1e-15);
  EXPECT_NEAR(pure[1].value, 0.0, 1e-15);
  const auto diag = eigen_decomposition(DensityMatrix::from_rows({{2.0 / 3, 0}, {0, 1.0 / 3}}, q));
  EXPECT_NEAR(diag[0].value, 2.0 / 3, 1e-15);
  EXPECT_NEAR(diag[1].value, 1.0 / 3, 1e-15);
}

TEST(EigenDecomposition, OrthonormalSortedAndRejectsNonHermitian) {
  Rng rng(9);
  const auto rho = random_density_matrix(SubsystemLayout{{"A", 2}, {"B", 3}}, rng);
  const auto pairs = eigen_decomposition(rho);
  double sum = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    sum += pairs[i].value;
    if (i > 0) EXPECT_GE(pairs[i - 1].value, pairs[i].value);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const Complex ip = pairs[i].vector.amplitudes().dot(pairs[j].vector.amplitudes());
      EXPECT_NEAR(std::abs(ip), i == j ? 1.0 : 0.0, 1e-12);
    }
  }
  EXPECT_NEAR(sum, 1.0, 1e-9);
  Matrix m(2, 2);
  m << 1, 1, 0, 1;
  EXPECT_THROW(eigen_decomposition(m, SubsystemLayout::qubits({"A"})), ValidationError);
}

TEST(Permute, RoundTrip) {
  Rng rng(2);
  const auto rho = random_density_matrix(SubsystemLayout{{"A", 2}, {"B", 3}, {"C", 2}}, rng);
  const auto p = permute(rho, {"C", "A", "B"});
  EXPECT_EQ(p.layout().labels(), (LabelSet{"C", "A", "B"}));
  EXPECT_LT(max_abs(permute(p, {"A", "B", "C"}).matrix() - rho.matrix()), 1e-15);
  EXPECT_LT(max_abs(partial_trace(p, {"B"}).matrix() - partial_trace(rho, {"B"}).matrix()), 1e-14);
}
