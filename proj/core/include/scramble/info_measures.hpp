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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scramble/layout.hpp"
#include "scramble/tensor.hpp"

namespace scramble {

/// Joint probability table over finite alphabets, one variable per label.
/// Stored row-major with the first variable most significant.
class JointDistribution {
 public:
  JointDistribution(LabelSet labels, std::vector<std::size_t> alphabet_sizes, std::vector<double> table);

  /// Binary variables from outcome strings, e.g. {{"000", 0.5}, {"111", 0.5}}.
  static JointDistribution from_bitstrings(LabelSet labels,
                                           const std::vector<std::pair<std::string, double>>& outcomes);

  const LabelSet& labels() const { return labels_; }
  const std::vector<std::size_t>& alphabet_sizes() const { return sizes_; }
  const std::vector<double>& table() const { return table_; }

  double probability(const std::vector<std::size_t>& outcome) const;

  /// Marginal on `variables`, in the order given.
  JointDistribution marginal(const LabelSet& variables) const;

 private:
  LabelSet labels_;
  std::vector<std::size_t> sizes_;
  std::vector<double> table_;
};

/// Entropies and mutual informations are in bits.
double shannon_entropy(std::span<const double> probabilities);
double shannon_entropy(const JointDistribution& p, const LabelSet& variables);

double von_neumann_entropy(const DensityMatrix& rho);

/// S(A) + S(B) - S(AB); labels outside a and b are traced out.
double qmi(const DensityMatrix& rho, const LabelSet& a, const LabelSet& b);

/// I(A:B) + I(A:C) - I(A:BC).
double tripartite_info(const DensityMatrix& rho, const LabelSet& a, const LabelSet& b, const LabelSet& c);

/// Seven-entropy form S_A+S_B+S_C-S_AB-S_AC-S_BC+S_ABC.
double tripartite_info_symmetric(const DensityMatrix& rho, const LabelSet& a, const LabelSet& b, const LabelSet& c);

double classical_mi(const JointDistribution& p, const LabelSet& a, const LabelSet& b);
double classical_tripartite_info(const JointDistribution& p, const LabelSet& a, const LabelSet& b,
                                 const LabelSet& c);

/// Diagonal of rho in the computational product basis, one variable per subsystem.
JointDistribution diagonal_distribution(const DensityMatrix& rho);

namespace detail {

/// -sum x log2 x over a spectrum; entries below 1e-12 contribute nothing.
double entropy_of_spectrum(const Eigen::VectorXd& spectrum);

/// Entropy of the reduced state of a raw matrix on `keep`.
double reduced_entropy(const Matrix& rho, const SubsystemLayout& layout, const LabelSet& keep);

}  // namespace detail

}  // namespace scramble
