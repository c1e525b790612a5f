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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "scramble/info_measures.hpp"
#include "scramble/measurement.hpp"
#include "scramble/measurement_search.hpp"
#include "scramble/optimizer_settings.hpp"
#include "scramble/tensor.hpp"

namespace scramble {

/// Phi_S(rho) = Tr_{not S}(V rho V^dagger). Kept subsystems follow the order
/// of the generator's output layout.
class InducedChannel {
 public:
  InducedChannel(Isometry generator, const LabelSet& kept);
  /// Keeps every output.
  explicit InducedChannel(Isometry generator);

  const Isometry& generator() const { return generator_; }
  LabelSet kept_labels() const { return kept_.labels(); }
  const SubsystemLayout& output_layout() const { return kept_; }
  const SubsystemLayout& input_layout() const { return generator_.input_layout(); }

  /// Raw action on an input-space operator.
  Matrix apply(const Matrix& rho) const;

 private:
  Isometry generator_;
  SubsystemLayout kept_;
  // Phi_S(|i><j|), row-major in (i, j).
  std::vector<Matrix> images_;
};

/// Throws DimensionError unless rho lives on the channel's input layout.
DensityMatrix apply_channel(const InducedChannel& channel, const DensityMatrix& rho);

/// sum_x p_x |x><x|_R (x) rho_x.
class ClassicalQuantumEnsemble {
 public:
  ClassicalQuantumEnsemble(std::vector<double> weights, std::vector<DensityMatrix> states,
                           std::string register_label = "R");
  /// Binary ensemble over the two letters of `basis` with weights (p0, 1 - p0).
  static ClassicalQuantumEnsemble from_encoding(const EncodingBasis& basis, double p0 = 0.5,
                                                const std::string& input_label = "A",
                                                const std::string& register_label = "R");

  const std::vector<double>& weights() const { return weights_; }
  const std::vector<DensityMatrix>& states() const { return states_; }
  const std::string& register_label() const { return register_label_; }
  const SubsystemLayout& input_layout() const { return states_.front().layout(); }

  /// State on [register, inputs...].
  DensityMatrix realized_state() const;

 private:
  std::vector<double> weights_;
  std::vector<DensityMatrix> states_;
  std::string register_label_;
};

/// sum_y (P_y (x) I) rho (P_y (x) I) with P_y the projectors of `mu`, which
/// acts on a subset of rho's subsystems.
DensityMatrix dephase(const DensityMatrix& rho, const ProjectiveMeasurement& mu);

/// p(x, y_1, ..., y_k) = p_x Tr[(mu_1 (x) ... (x) mu_k) Phi_S(rho_x)]. The
/// measurement groups must partition the kept labels. Variables are the
/// register label followed by one per group (its labels joined by ',').
JointDistribution joint_distribution(const ClassicalQuantumEnsemble& ensemble, const InducedChannel& channel,
                                     const std::vector<ProjectiveMeasurement>& measurements);

/// Conditional states of `ensemble` after `channel`, reduced to `measured`.
OutputEnsemble output_ensemble(const ClassicalQuantumEnsemble& ensemble, const InducedChannel& channel,
                               const LabelSet& measured);

struct AccessibleInfo {
  double value = 0.0;
  ProjectiveMeasurement measurement;
  /// Ensemble the measurement was optimized for, kept for oracle checks.
  OutputEnsemble ensemble;
  bool converged = false;
  bool saturated = false;
  std::size_t evaluations = 0;
};

/// sup over projective measurements on `measured` of I(R:Y).
AccessibleInfo accessible_info_fixed_encoding(const ClassicalQuantumEnsemble& ensemble, const InducedChannel& channel,
                                              const LabelSet& measured, const OptimizerSettings& settings);

struct ChannelAccessibleInfo {
  double value = 0.0;
  /// Canonical maximizer (theta, phi in [0, pi]); weights follow its letters.
  EncodingBasis encoding = EncodingBasis::computational();
  std::array<double, 2> weights = {0.5, 0.5};
  AccessibleInfo at_optimum;
  bool converged = false;
  std::size_t evaluations = 0;
};

/// sup over binary orthonormal qubit encodings, their weights and
/// measurements on `measured`.
ChannelAccessibleInfo accessible_info_channel(const InducedChannel& channel, const LabelSet& measured,
                                              const OptimizerSettings& settings);

struct I3AccResult {
  double value = 0.0;
  ChannelAccessibleInfo rc;
  ChannelAccessibleInfo rd;
  ChannelAccessibleInfo rcd;
  bool converged = false;
};

/// I_acc(R:C) + I_acc(R:D) - I_acc(R:CD), each term optimized on its own.
I3AccResult i3_acc(const Isometry& v, const LabelSet& c, const LabelSet& d, const OptimizerSettings& settings);

struct J3Summands {
  double value = 0.0;
  AccessibleInfo rc;
  AccessibleInfo rd;
  AccessibleInfo rcd;
  bool converged = false;
};

/// The three accessible informations at a common encoding.
J3Summands j3_acc_fixed_encoding(const Isometry& v, const LabelSet& c, const LabelSet& d,
                                 const ClassicalQuantumEnsemble& ensemble, const OptimizerSettings& settings);

struct J3Optimum {
  double value = 0.0;
  EncodingBasis encoding = EncodingBasis::computational();
  std::array<double, 2> weights = {0.5, 0.5};
  J3Summands summands;
  bool converged = false;
  std::size_t evaluations = 0;
};

/// sup over encodings of j3_acc_fixed_encoding; balanced weights unless
/// settings.optimize_weights_j3.
J3Optimum j3_acc_optimized(const Isometry& v, const LabelSet& c, const LabelSet& d, const OptimizerSettings& settings);

/// Random-measurement check of an optimized accessible information.
OracleReport check_with_oracle(const AccessibleInfo& info, const OptimizerSettings& settings, std::uint64_t stream);

}  // namespace scramble
