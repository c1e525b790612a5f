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

#include "scramble/measurement_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "scramble/error.hpp"
#include "scramble/info_measures.hpp"
#include "scramble/measurement.hpp"
#include "scramble/random.hpp"
#include "scramble/simplex.hpp"

namespace scramble {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSaturationSlack = 1e-12;

double xlog2x(double x) { return x > 1e-300 ? x * std::log2(x) : 0.0; }

// I(X:Y) from weights and row-major conditionals q[x * ny + y].
double information_from_conditionals(std::span<const double> px, const double* q, std::size_t ny) {
  double hy = 0.0, hxy = 0.0, hx = 0.0;
  for (std::size_t y = 0; y < ny; ++y) {
    double r = 0.0;
    for (std::size_t x = 0; x < px.size(); ++x) r += px[x] * q[x * ny + y];
    hy -= xlog2x(r);
  }
  for (std::size_t x = 0; x < px.size(); ++x) {
    hx -= xlog2x(px[x]);
    for (std::size_t y = 0; y < ny; ++y) hxy -= xlog2x(px[x] * q[x * ny + y]);
  }
  return std::max(hx + hy - hxy, 0.0);
}

double upper_bound(const OutputEnsemble& e) { return std::min(register_entropy(e), holevo_quantity(e)); }

// ---- qubit measurements on the Bloch sphere ----

struct BlochEnsemble {
  std::vector<double> px;
  std::vector<std::array<double, 3>> r;

  explicit BlochEnsemble(const OutputEnsemble& e) : px(e.weights) {
    for (const auto& s : e.states) {
      r.push_back({2.0 * s(0, 1).real(), -2.0 * s(0, 1).imag(), (s(0, 0) - s(1, 1)).real()});
    }
  }

  double operator()(double theta, double phi) const {
    const double n[3] = {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
    std::array<double, 16> q{};
    for (std::size_t x = 0; x < px.size(); ++x) {
      const double p0 = std::clamp(0.5 * (1.0 + n[0] * r[x][0] + n[1] * r[x][1] + n[2] * r[x][2]), 0.0, 1.0);
      q[2 * x] = p0;
      q[2 * x + 1] = 1.0 - p0;
    }
    return information_from_conditionals(px, q.data(), 2);
  }
};

std::array<double, 2> bloch_angles(const std::array<double, 3>& v) {
  const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (norm < 1e-14) return {0.0, 0.0};
  return {std::acos(std::clamp(v[2] / norm, -1.0, 1.0)), std::atan2(v[1], v[0])};
}

MeasurementOptimum optimize_qubit(const OutputEnsemble& e, const OptimizerSettings& s,
                                  std::span<const Matrix> seeds, SearchEffort effort) {
  const BlochEnsemble f(e);
  const double bound = upper_bound(e);
  std::size_t evals = 0;

  struct Start {
    double value;
    double theta;
    double phi;
  };
  std::vector<Start> starts;
  auto add = [&](double theta, double phi) {
    ++evals;
    starts.push_back({f(theta, phi), theta, phi});
  };

  // Structured seeds: Helstrom axis, state axes, caller seeds.
  if (f.r.size() == 2) {
    std::array<double, 3> h{};
    for (int k = 0; k < 3; ++k) h[k] = f.px[0] * f.r[0][k] - f.px[1] * f.r[1][k];
    const auto a = bloch_angles(h);
    add(a[0], a[1]);
  }
  for (const auto& rx : f.r) {
    const auto a = bloch_angles(rx);
    add(a[0], a[1]);
  }
  add(0.0, 0.0);
  for (const auto& b : seeds) {
    const auto p = measurement_parameters(b);
    add(p[0], p[1]);
  }

  const std::size_t m = effort == SearchEffort::full ? s.measurement_grid : std::max<std::size_t>(2, s.measurement_grid / 3);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      add(kPi * static_cast<double>(i) / static_cast<double>(m - 1), kPi * static_cast<double>(j) / static_cast<double>(m - 1));
    }
  }
  std::stable_sort(starts.begin(), starts.end(), [](const Start& a, const Start& b) { return a.value > b.value; });

  MeasurementOptimum best;
  best.value = starts.front().value;
  double best_theta = starts.front().theta, best_phi = starts.front().phi;
  best.converged = true;
  if (best.value < bound - kSaturationSlack) {
    const Objective objective = [&](std::span<const double> x) { return f(x[0], x[1]); };
    const std::size_t k = std::min(starts.size(), effort == SearchEffort::full ? s.refine_top_k : std::size_t{2});
    const std::size_t rounds = effort == SearchEffort::full ? s.max_refine_rounds : 2;
    const double step = kPi / static_cast<double>(m - 1);
    for (std::size_t i = 0; i < k; ++i) {
      const auto r = refine_simplex(objective, {starts[i].theta, starts[i].phi}, s.simplex(step), s.improvement_tolerance, rounds);
      evals += r.evaluations;
      if (i == 0) best.converged = r.converged;
      if (r.value > best.value) {
        best.value = r.value;
        best_theta = r.point[0];
        best_phi = r.point[1];
        best.converged = r.converged;
      }
      if (best.value >= bound - kSaturationSlack) break;
    }
  }
  best.saturated = best.value >= bound - kSaturationSlack;
  if (best.saturated) best.converged = true;
  const std::array<double, 2> params = {best_theta, best_phi};
  best.basis = measurement_basis(2, params);
  best.evaluations = evals;
  return best;
}

// ---- general joint measurements, local chart U0 * G(x) ----

struct ChartObjective {
  const OutputEnsemble& e;
  Matrix base;
  mutable Matrix work;
  mutable std::vector<double> q;

  double operator()(std::span<const double> x) const {
    work = base;
    apply_rotations(work, x);
    return evaluate(work);
  }

  double evaluate(const Matrix& u) const {
    const auto d = static_cast<Eigen::Index>(e.dim());
    const std::size_t nx = e.weights.size();
    q.assign(nx * static_cast<std::size_t>(d), 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      const Matrix& sigma = e.states[x];
      for (Eigen::Index y = 0; y < d; ++y) {
        // <u_y| sigma |u_y>
        double acc = 0.0;
        for (Eigen::Index a = 0; a < d; ++a) {
          Complex row(0.0, 0.0);
          for (Eigen::Index b = 0; b < d; ++b) row += sigma(a, b) * u(b, y);
          acc += (std::conj(u(a, y)) * row).real();
        }
        q[x * static_cast<std::size_t>(d) + static_cast<std::size_t>(y)] = std::clamp(acc, 0.0, 1.0);
      }
    }
    return information_from_conditionals(e.weights, q.data(), static_cast<std::size_t>(d));
  }
};

Matrix eigenbasis(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
  return solver.eigenvectors().rowwise().reverse();
}

MeasurementOptimum optimize_joint(const OutputEnsemble& e, const OptimizerSettings& s, std::uint64_t seed,
                                  std::span<const Matrix> seeds, SearchEffort effort) {
  const auto d = static_cast<Eigen::Index>(e.dim());
  const double bound = upper_bound(e);
  std::size_t evals = 0;

  std::vector<Matrix> structured(seeds.begin(), seeds.end());
  if (e.states.size() == 2) structured.push_back(eigenbasis(e.weights[0] * e.states[0] - e.weights[1] * e.states[1]));
  Matrix average = Matrix::Zero(d, d);
  for (std::size_t x = 0; x < e.states.size(); ++x) {
    structured.push_back(eigenbasis(e.states[x]));
    average += e.weights[x] * e.states[x];
  }
  structured.push_back(eigenbasis(average));
  structured.push_back(Matrix::Identity(d, d));

  ChartObjective scorer{e, Matrix::Identity(d, d), Matrix(), {}};
  struct Start {
    double value;
    std::size_t index;
  };
  std::vector<Start> ranked;
  for (std::size_t i = 0; i < structured.size(); ++i) {
    ++evals;
    ranked.push_back({scorer.evaluate(structured[i]), i});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const Start& a, const Start& b) { return a.value > b.value; });

  std::vector<Matrix> starts;
  const std::size_t k = std::min(ranked.size(), effort == SearchEffort::full ? s.refine_top_k : std::size_t{2});
  for (std::size_t i = 0; i < k; ++i) starts.push_back(structured[ranked[i].index]);
  if (effort == SearchEffort::full) {
    for (std::size_t r = 0; r < s.measurement_restarts; ++r) {
      Rng rng(derive_seed(seed, r));
      starts.push_back(haar_unitary(static_cast<std::size_t>(d), rng));
    }
  }

  MeasurementOptimum best;
  best.value = ranked.front().value;
  best.basis = structured[ranked.front().index];
  best.converged = true;
  const std::size_t rounds = effort == SearchEffort::full ? s.max_refine_rounds : 1;
  const std::vector<double> origin(measurement_parameter_count(static_cast<std::size_t>(d)), 0.0);
  for (const Matrix& start : starts) {
    if (best.value >= bound - kSaturationSlack) break;
    ChartObjective objective{e, start, Matrix(), {}};
    const Objective f = [&](std::span<const double> x) { return objective(x); };
    const auto r = refine_simplex(f, origin, s.simplex(0.3), s.improvement_tolerance, rounds);
    evals += r.evaluations;
    if (r.value > best.value) {
      best.value = r.value;
      best.basis = start;
      apply_rotations(best.basis, r.point);
      best.converged = r.converged;
    }
  }
  best.saturated = best.value >= bound - kSaturationSlack;
  if (best.saturated) best.converged = true;
  best.evaluations = evals;
  return best;
}

}  // namespace

double register_entropy(const OutputEnsemble& ensemble) { return shannon_entropy(ensemble.weights); }

double holevo_quantity(const OutputEnsemble& ensemble) {
  const auto d = static_cast<Eigen::Index>(ensemble.dim());
  Matrix average = Matrix::Zero(d, d);
  double conditional = 0.0;
  for (std::size_t x = 0; x < ensemble.states.size(); ++x) {
    average += ensemble.weights[x] * ensemble.states[x];
    conditional += ensemble.weights[x] * detail::entropy_of_spectrum(detail::clamped_spectrum(ensemble.states[x]));
  }
  return std::max(detail::entropy_of_spectrum(detail::clamped_spectrum(average)) - conditional, 0.0);
}

Eigen::MatrixXd outcome_conditionals(const OutputEnsemble& ensemble, const Matrix& basis) {
  const auto d = static_cast<Eigen::Index>(ensemble.dim());
  if (basis.rows() != d || basis.cols() != d) throw DimensionError("measurement basis does not match the ensemble");
  Eigen::MatrixXd q(static_cast<Eigen::Index>(ensemble.states.size()), d);
  for (std::size_t x = 0; x < ensemble.states.size(); ++x) {
    for (Eigen::Index y = 0; y < d; ++y) {
      const Complex v = basis.col(y).dot(ensemble.states[x] * basis.col(y));
      q(static_cast<Eigen::Index>(x), y) = std::clamp(v.real(), 0.0, 1.0);
    }
  }
  return q;
}

double measured_information(const OutputEnsemble& ensemble, const Matrix& basis) {
  const Eigen::MatrixXd q = outcome_conditionals(ensemble, basis);
  const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows = q;
  return information_from_conditionals(ensemble.weights, rows.data(), static_cast<std::size_t>(q.cols()));
}

MeasurementOptimum optimize_measurement(const OutputEnsemble& ensemble, const OptimizerSettings& settings,
                                        std::uint64_t seed, std::span<const Matrix> seeds, SearchEffort effort) {
  if (ensemble.weights.size() != ensemble.states.size() || ensemble.states.empty()) {
    throw ValidationError("ensemble needs one state per weight");
  }
  const std::size_t d = ensemble.dim();
  if (d == 1) {
    MeasurementOptimum trivial;
    trivial.basis = Matrix::Identity(1, 1);
    trivial.converged = true;
    trivial.saturated = true;
    return trivial;
  }
  if (d == 2) return optimize_qubit(ensemble, settings, seeds, effort);
  return optimize_joint(ensemble, settings, seed, seeds, effort);
}

OracleReport measurement_oracle(const OutputEnsemble& ensemble, double value, std::size_t samples, double margin,
                                std::uint64_t seed) {
  OracleReport report;
  report.samples = samples;
  report.value = value;
  report.margin = margin;
  report.best_sampled = 0.0;
  const std::size_t d = ensemble.dim();
  Rng rng(seed);
  ChartObjective scorer{ensemble, Matrix(), Matrix(), {}};
  for (std::size_t i = 0; i < samples; ++i) {
    report.best_sampled = std::max(report.best_sampled, scorer.evaluate(haar_unitary(d, rng)));
  }
  report.passed = report.best_sampled <= value + margin;
  return report;
}

}  // namespace scramble
