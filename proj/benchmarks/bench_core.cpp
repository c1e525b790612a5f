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

#include <benchmark/benchmark.h>

#include "scramble/accessible_info.hpp"
#include "scramble/channel_capacity.hpp"
#include "scramble/info_measures.hpp"
#include "scramble/random.hpp"
#include "scramble/scrambling_states.hpp"

using namespace scramble;

namespace {

void BM_PartialTrace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  LabelSet labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
  Rng rng(1);
  const auto rho = random_density_matrix(SubsystemLayout::qubits(labels), rng);
  const LabelSet keep(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n / 2));
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, keep));
}
BENCHMARK(BM_PartialTrace)->DenseRange(2, 8, 2);

void BM_DoubleArmI3(benchmark::State& state) {
  Rng rng(2);
  const Isometry u(haar_unitary(4, rng), SubsystemLayout::qubits({"A", "B"}), SubsystemLayout::qubits({"1", "2"}));
  for (auto _ : state) benchmark::DoNotOptimize(double_arm_tripartite_info(u));
}
BENCHMARK(BM_DoubleArmI3);

void BM_MeasuredInformation(benchmark::State& state) {
  const auto ens = ClassicalQuantumEnsemble::from_encoding(EncodingBasis(1.0, 0.4));
  const InducedChannel ch(find_example("W3").generator, {"1", "2"});
  const auto out = output_ensemble(ens, ch, ch.kept_labels());
  Rng rng(3);
  const Matrix basis = haar_unitary(4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(measured_information(out, basis));
}
BENCHMARK(BM_MeasuredInformation);

void BM_OptimizeMeasurement(benchmark::State& state) {
  const auto ens = ClassicalQuantumEnsemble::from_encoding(EncodingBasis(1.0, 0.4));
  LabelSet kept = {"1"};
  if (state.range(0) == 4) kept = {"1", "2"};
  const InducedChannel ch(find_example("W3").generator, kept);
  const auto out = output_ensemble(ens, ch, kept);
  OptimizerSettings s;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_measurement(out, s, 1).value);
}
BENCHMARK(BM_OptimizeMeasurement)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BlahutArimoto(benchmark::State& state) {
  const auto z = ClassicalChannel::z_channel(1.0 / 3);
  for (auto _ : state) benchmark::DoNotOptimize(blahut_arimoto(z).capacity);
}
BENCHMARK(BM_BlahutArimoto);

void BM_I3AccW3Pair(benchmark::State& state) {
  const auto v = find_example("W3").generator;
  OptimizerSettings s;
  s.oracle_samples = 0;
  for (auto _ : state) benchmark::DoNotOptimize(i3_acc(v, {"1"}, {"2"}, s).value);
}
BENCHMARK(BM_I3AccW3Pair)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
