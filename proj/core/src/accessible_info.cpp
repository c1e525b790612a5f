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

#include "scramble/accessible_info.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <span>
#include <utility>

#include "scramble/error.hpp"
#include "scramble/parallel.hpp"
#include "scramble/random.hpp"
#include "scramble/simplex.hpp"

namespace scramble {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWeightTolerance = 1e-12;
constexpr double kTieTolerance = 1e-9;

// `labels` sorted by their position in `layout`.
LabelSet in_layout_order(const SubsystemLayout& layout, const LabelSet& labels) {
  if (labels.empty()) throw PartitionError("label group is empty");
  std::vector<std::size_t> pos = layout.indices_of(labels);
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) throw PartitionError("label group repeats a label");
  LabelSet out;
  for (auto p : pos) out.push_back(layout[p].label);
  return out;
}

std::string group_name(const LabelSet& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l;
  return out;
}

Matrix encoding_state(const EncodingBasis& basis, std::size_t letter) {
  const Vector a = basis.amplitudes(letter);
  return a * a.adjoint();
}

OutputEnsemble make_output_ensemble(const std::vector<double>& weights, const std::vector<Matrix>& inputs,
                                    const InducedChannel& channel, const LabelSet& measured_ordered) {
  OutputEnsemble e;
  e.weights = weights;
  e.layout = channel.output_layout().select(measured_ordered);
  for (const auto& rho : inputs) {
    e.states.push_back(detail::reduce(channel.apply(rho), channel.output_layout(), measured_ordered));
  }
  return e;
}

AccessibleInfo finish(const OptimizerSettings&, OutputEnsemble ensemble, const MeasurementOptimum& opt) {
  AccessibleInfo info;
  info.value = opt.value;
  info.measurement = ProjectiveMeasurement::from_unitary(opt.basis, ensemble.layout);
  info.ensemble = std::move(ensemble);
  info.converged = opt.converged;
  info.saturated = opt.saturated;
  info.evaluations = opt.evaluations;
  return info;
}

// Basis of C (x) D reordered to the subsystem order of `joint`.
Matrix product_basis(const Matrix& bc, const SubsystemLayout& c, const Matrix& bd, const SubsystemLayout& d,
                     const SubsystemLayout& joint) {
  const Matrix k = detail::kron(bc, bd);
  const SubsystemLayout cd = c.concat(d);
  std::vector<std::size_t> perm;
  for (const auto& l : joint.labels()) perm.push_back(cd.index_of(l));
  const auto map = detail::permutation_index_map(cd.dims(), perm);
  Matrix out(k.rows(), k.cols());
  for (Eigen::Index i = 0; i < k.rows(); ++i) out.row(i) = k.row(static_cast<Eigen::Index>(map[static_cast<std::size_t>(i)]));
  return out;
}

// ---- encoding searches ----

struct EncodingPoint {
  double theta = 0.0;
  double phi = 0.0;
  double p0 = 0.5;
};

struct EncodingEval {
  double value = 0.0;
  /// Optimal basis for each measured group, reused as warm starts.
  std::vector<Matrix> bases;
  std::vector<AccessibleInfo> infos;
  bool converged = true;
  std::size_t evaluations = 0;
};

using EncodingObjective =
    std::function<EncodingEval(const EncodingPoint&, SearchEffort, const std::vector<Matrix>& warm, std::uint64_t seed)>;

struct EncodingSearch {
  EncodingPoint point;
  EncodingEval eval;
  std::size_t evaluations = 0;
  bool converged = true;
};

std::vector<double> grid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = kPi * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

EncodingPoint canonical_point(const EncodingPoint& p) {
  bool swapped = false;
  const EncodingBasis b = EncodingBasis(p.theta, p.phi).canonical(&swapped);
  return {b.theta(), b.phi(), swapped ? 1.0 - p.p0 : p.p0};
}

bool precedes(const EncodingPoint& a, const EncodingPoint& b) {
  if (std::abs(a.theta - b.theta) > 1e-12) return a.theta < b.theta;
  return a.phi < b.phi;
}

EncodingSearch search_encodings(const EncodingObjective& objective, const OptimizerSettings& s, bool optimize_weights) {
  s.validate();
  const auto thetas = grid(s.encoding_grid_theta);
  const auto phis = grid(s.encoding_grid_phi);
  const std::size_t cells = thetas.size() * phis.size();

  // Stage 1: coarse grid at balanced weights.
  std::vector<EncodingEval> coarse(cells);
  parallel_for(
      cells,
      [&](std::size_t k) {
        const EncodingPoint p{thetas[k / phis.size()], phis[k % phis.size()], 0.5};
        coarse[k] = objective(p, SearchEffort::quick, {}, derive_seed(s.seed, k));
      },
      s.threads);
  std::size_t evaluations = 0;
  for (const auto& c : coarse) evaluations += c.evaluations;

  std::vector<std::size_t> order(cells);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return coarse[a].value > coarse[b].value; });
  const std::size_t k = std::min(s.refine_top_k, cells);

  // Stage 2: simplex over (theta, phi[, t]) with p0 = sin^2 t.
  const double step = kPi / static_cast<double>(std::max(s.encoding_grid_theta, s.encoding_grid_phi) - 1);
  struct Refined {
    EncodingPoint point;
    std::vector<Matrix> warm;
    std::size_t evaluations = 0;
    bool converged = true;
  };
  std::vector<Refined> refined(k);
  parallel_for(
      k,
      [&](std::size_t i) {
        const std::size_t cell = order[i];
        std::vector<Matrix> warm = coarse[cell].bases;
        std::size_t evals = 0;
        auto to_point = [&](std::span<const double> x) {
          EncodingPoint p{x[0], x[1], 0.5};
          if (optimize_weights) p.p0 = std::pow(std::sin(x[2]), 2);
          return p;
        };
        const Objective f = [&](std::span<const double> x) {
          EncodingEval e = objective(to_point(x), SearchEffort::quick, warm, derive_seed(s.seed, cell));
          evals += e.evaluations;
          warm = std::move(e.bases);
          return e.value;
        };
        std::vector<double> start = {thetas[cell / phis.size()], phis[cell % phis.size()]};
        if (optimize_weights) start.push_back(kPi / 4.0);
        const auto r = refine_simplex(f, start, s.simplex(step), s.improvement_tolerance, s.max_refine_rounds);
        // Re-evaluate at the optimum so the warm bases belong to it.
        f(r.point);
        refined[i] = {to_point(r.point), warm, evals, r.converged};
      },
      s.threads);

  // Stage 3: full-effort evaluation of each candidate.
  std::vector<EncodingEval> finals(k);
  parallel_for(
      k,
      [&](std::size_t i) {
        finals[i] = objective(refined[i].point, SearchEffort::full, refined[i].warm, derive_seed(s.seed, cells + i));
      },
      s.threads);

  EncodingSearch best;
  bool have = false;
  for (std::size_t i = 0; i < k; ++i) {
    evaluations += refined[i].evaluations + finals[i].evaluations;
    const EncodingPoint p = canonical_point(refined[i].point);
    const double v = finals[i].value;
    const bool better = !have || v > best.eval.value + kTieTolerance ||
                        (std::abs(v - best.eval.value) <= kTieTolerance && precedes(p, best.point));
    if (better) {
      best.point = p;
      best.eval = finals[i];
      best.converged = refined[i].converged && finals[i].converged;
      have = true;
    }
  }
  best.evaluations = evaluations;
  return best;
}

std::vector<Matrix> letters(const EncodingPoint& p) {
  const EncodingBasis b(p.theta, p.phi);
  return {encoding_state(b, 0), encoding_state(b, 1)};
}

const Matrix* warm_at(const std::vector<Matrix>& warm, std::size_t i) { return i < warm.size() ? &warm[i] : nullptr; }

std::span<const Matrix> as_seeds(const Matrix* m) { return m ? std::span<const Matrix>(m, 1) : std::span<const Matrix>(); }

// The three summands of j3 for one encoding. Group order in `bases`: C, D, CD.
EncodingEval j3_summands(const InducedChannel& ch, const LabelSet& c, const LabelSet& d, const LabelSet& cd,
                         const std::vector<double>& weights, const std::vector<Matrix>& inputs,
                         const OptimizerSettings& s, SearchEffort effort, const std::vector<Matrix>& warm,
                         std::uint64_t seed) {
  OutputEnsemble ec = make_output_ensemble(weights, inputs, ch, c);
  OutputEnsemble ed = make_output_ensemble(weights, inputs, ch, d);
  OutputEnsemble ecd = make_output_ensemble(weights, inputs, ch, cd);
  const auto oc = optimize_measurement(ec, s, derive_seed(seed, 0), as_seeds(warm_at(warm, 0)), effort);
  const auto od = optimize_measurement(ed, s, derive_seed(seed, 1), as_seeds(warm_at(warm, 1)), effort);
  // The product of the local optima keeps I(R:CD) >= max(I(R:C), I(R:D)).
  std::vector<Matrix> seeds = {product_basis(oc.basis, ec.layout, od.basis, ed.layout, ecd.layout)};
  if (const Matrix* w = warm_at(warm, 2)) seeds.push_back(*w);
  const auto ocd = optimize_measurement(ecd, s, derive_seed(seed, 2), seeds, effort);

  EncodingEval e;
  e.value = oc.value + od.value - ocd.value;
  e.bases = {oc.basis, od.basis, ocd.basis};
  e.converged = oc.converged && od.converged && ocd.converged;
  e.evaluations = oc.evaluations + od.evaluations + ocd.evaluations;
  if (effort == SearchEffort::full) {
    e.infos.push_back(finish(s, std::move(ec), oc));
    e.infos.push_back(finish(s, std::move(ed), od));
    e.infos.push_back(finish(s, std::move(ecd), ocd));
  }
  return e;
}

struct Tripartition {
  InducedChannel channel;
  LabelSet c, d, cd;
};

Tripartition tripartition(const Isometry& v, const LabelSet& c, const LabelSet& d) {
  if (v.input_layout().total_dim() != 2) throw DimensionError("encodings are defined for a qubit input");
  require_disjoint({c, d});
  const InducedChannel ch(v);
  LabelSet oc = in_layout_order(ch.output_layout(), c);
  LabelSet od = in_layout_order(ch.output_layout(), d);
  LabelSet ocd = in_layout_order(ch.output_layout(), join_labels({c, d}));
  return {ch, std::move(oc), std::move(od), std::move(ocd)};
}

}  // namespace

// ---- InducedChannel ----

InducedChannel::InducedChannel(Isometry generator, const LabelSet& kept) : generator_(std::move(generator)) {
  const SubsystemLayout& out = generator_.output_layout();
  const LabelSet ordered = in_layout_order(out, kept);
  kept_ = out.select(ordered);
  std::vector<std::size_t> pos = out.indices_of(ordered);
  const auto din = static_cast<Eigen::Index>(generator_.input_layout().total_dim());
  const Matrix& m = generator_.matrix();
  images_.reserve(static_cast<std::size_t>(din * din));
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index j = 0; j < din; ++j) {
      const Matrix full = m.col(i) * m.col(j).adjoint();
      images_.push_back(detail::partial_trace(full, out.dims(), pos));
    }
  }
}

InducedChannel::InducedChannel(Isometry generator) : InducedChannel(generator, generator.output_layout().labels()) {}

Matrix InducedChannel::apply(const Matrix& rho) const {
  const auto din = static_cast<Eigen::Index>(generator_.input_layout().total_dim());
  if (rho.rows() != din || rho.cols() != din) throw DimensionError("operator does not match the channel input");
  const auto dk = static_cast<Eigen::Index>(kept_.total_dim());
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index j = 0; j < din; ++j) {
      const Complex r = rho(i, j);
      if (r != Complex(0.0, 0.0)) out += r * images_[static_cast<std::size_t>(i * din + j)];
    }
  }
  return out;
}

DensityMatrix apply_channel(const InducedChannel& channel, const DensityMatrix& rho) {
  if (!(rho.layout() == channel.input_layout())) {
    throw DimensionError("state layout " + rho.layout().to_string() + " does not match channel input " +
                         channel.input_layout().to_string());
  }
  Matrix out = channel.apply(rho.matrix());
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out), channel.output_layout());
}

// ---- ClassicalQuantumEnsemble ----

ClassicalQuantumEnsemble::ClassicalQuantumEnsemble(std::vector<double> weights, std::vector<DensityMatrix> states,
                                                   std::string register_label)
    : weights_(std::move(weights)), states_(std::move(states)), register_label_(std::move(register_label)) {
  if (weights_.empty() || weights_.size() != states_.size()) throw ValidationError("ensemble needs one state per weight");
  double total = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) throw ValidationError("ensemble weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) throw ValidationError("ensemble weights must sum to 1");
  for (const auto& s : states_) {
    if (!(s.layout() == states_.front().layout())) throw DimensionError("conditional states live on different layouts");
  }
  if (states_.front().layout().contains(register_label_)) throw LabelCollisionError("register label clashes with the input");
}

ClassicalQuantumEnsemble ClassicalQuantumEnsemble::from_encoding(const EncodingBasis& basis, double p0,
                                                                 const std::string& input_label,
                                                                 const std::string& register_label) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw ValidationError("p0 must lie in [0, 1]");
  const auto kets = basis.kets(input_label);
  return ClassicalQuantumEnsemble({p0, 1.0 - p0}, {projector(kets[0]), projector(kets[1])}, register_label);
}

DensityMatrix ClassicalQuantumEnsemble::realized_state() const {
  const auto n = static_cast<Eigen::Index>(weights_.size());
  const auto d = static_cast<Eigen::Index>(input_layout().total_dim());
  Matrix m = Matrix::Zero(n * d, n * d);
  for (Eigen::Index x = 0; x < n; ++x) {
    m.block(x * d, x * d, d, d) = weights_[static_cast<std::size_t>(x)] * states_[static_cast<std::size_t>(x)].matrix();
  }
  const SubsystemLayout reg{{register_label_, static_cast<std::size_t>(n)}};
  return DensityMatrix(std::move(m), reg.concat(input_layout()));
}

// ---- dephasing and joint distributions ----

DensityMatrix dephase(const DensityMatrix& rho, const ProjectiveMeasurement& mu) {
  const SubsystemLayout& layout = rho.layout();
  const LabelSet measured = mu.layout().labels();
  for (const auto& l : measured) {
    if (layout.index_of(l) >= layout.size() || layout[layout.index_of(l)].dim != mu.layout()[mu.layout().index_of(l)].dim) {
      throw DimensionError("measurement subsystem '" + l + "' does not match the state");
    }
  }
  if (mu.outcomes() != mu.layout().total_dim()) throw MeasurementError("incomplete measurement basis");

  // Measured subsystems first, in the measurement's order.
  LabelSet order = measured;
  for (const auto& l : layout.labels()) {
    if (std::find(measured.begin(), measured.end(), l) == measured.end()) order.push_back(l);
  }
  const DensityMatrix front = permute(rho, order);
  const auto dm = static_cast<Eigen::Index>(mu.layout().total_dim());
  const auto rest = static_cast<Eigen::Index>(layout.total_dim()) / dm;
  const Matrix w = detail::kron(mu.basis_matrix(), Matrix::Identity(rest, rest));
  Matrix inbasis = w.adjoint() * front.matrix() * w;
  for (Eigen::Index a = 0; a < dm; ++a) {
    for (Eigen::Index b = 0; b < dm; ++b) {
      if (a != b) inbasis.block(a * rest, b * rest, rest, rest).setZero();
    }
  }
  Matrix out = w * inbasis * w.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return permute(DensityMatrix(std::move(out), front.layout()), layout.labels());
}

JointDistribution joint_distribution(const ClassicalQuantumEnsemble& ensemble, const InducedChannel& channel,
                                     const std::vector<ProjectiveMeasurement>& measurements) {
  if (ensemble.input_layout().total_dim() != channel.input_layout().total_dim()) {
    throw DimensionError("ensemble does not match the channel input");
  }
  std::vector<LabelSet> groups;
  for (const auto& m : measurements) groups.push_back(m.layout().labels());
  require_disjoint(groups);
  const LabelSet order = join_labels(groups);
  LabelSet sorted_order = order, kept = channel.kept_labels();
  std::sort(sorted_order.begin(), sorted_order.end());
  std::sort(kept.begin(), kept.end());
  if (sorted_order != kept) throw PartitionError("measurement groups must partition the kept subsystems");

  Matrix basis = Matrix::Identity(1, 1);
  for (const auto& m : measurements) basis = detail::kron(basis, m.basis_matrix());

  LabelSet labels = {ensemble.register_label()};
  std::vector<std::size_t> sizes = {ensemble.weights().size()};
  for (std::size_t g = 0; g < measurements.size(); ++g) {
    labels.push_back(group_name(groups[g]));
    sizes.push_back(measurements[g].outcomes());
  }
  const auto dout = basis.cols();
  std::vector<double> table;
  table.reserve(ensemble.weights().size() * static_cast<std::size_t>(dout));
  for (std::size_t x = 0; x < ensemble.weights().size(); ++x) {
    const DensityMatrix out(channel.apply(ensemble.states()[x].matrix()), channel.output_layout());
    const Matrix sigma = permute(out, order).matrix();
    for (Eigen::Index y = 0; y < dout; ++y) {
      const double p = basis.col(y).dot(sigma * basis.col(y)).real();
      table.push_back(ensemble.weights()[x] * std::max(p, 0.0));
    }
  }
  const double total = std::accumulate(table.begin(), table.end(), 0.0);
  for (auto& t : table) t /= total;
  return JointDistribution(std::move(labels), std::move(sizes), std::move(table));
}

OutputEnsemble output_ensemble(const ClassicalQuantumEnsemble& ensemble, const InducedChannel& channel,
                               const LabelSet& measured) {
  if (ensemble.input_layout().total_dim() != channel.input_layout().total_dim()) {
    throw DimensionError("ensemble does not match the channel input");
  }
  std::vector<Matrix> inputs;
  for (const auto& s : ensemble.states()) inputs.push_back(s.matrix());
  return make_output_ensemble(ensemble.weights(), inputs, channel, in_layout_order(channel.output_layout(), measured));
}

// ---- accessible informations ----

AccessibleInfo accessible_info_fixed_encoding(const ClassicalQuantumEnsemble& ensemble, const InducedChannel& channel,
                                              const LabelSet& measured, const OptimizerSettings& settings) {
  settings.validate();
  OutputEnsemble e = output_ensemble(ensemble, channel, measured);
  const auto opt = optimize_measurement(e, settings, settings.seed);
  return finish(settings, std::move(e), opt);
}

ChannelAccessibleInfo accessible_info_channel(const InducedChannel& channel, const LabelSet& measured,
                                              const OptimizerSettings& settings) {
  if (channel.input_layout().total_dim() != 2) throw DimensionError("encodings are defined for a qubit input");
  const LabelSet ordered = in_layout_order(channel.output_layout(), measured);
  const EncodingObjective objective = [&](const EncodingPoint& p, SearchEffort effort, const std::vector<Matrix>& warm,
                                          std::uint64_t seed) {
    OutputEnsemble e = make_output_ensemble({p.p0, 1.0 - p.p0}, letters(p), channel, ordered);
    const auto opt = optimize_measurement(e, settings, seed, as_seeds(warm_at(warm, 0)), effort);
    EncodingEval out;
    out.value = opt.value;
    out.bases = {opt.basis};
    out.converged = opt.converged;
    out.evaluations = opt.evaluations;
    if (effort == SearchEffort::full) out.infos.push_back(finish(settings, std::move(e), opt));
    return out;
  };
  const EncodingSearch found = search_encodings(objective, settings, true);

  ChannelAccessibleInfo result;
  result.value = found.eval.value;
  result.encoding = EncodingBasis(found.point.theta, found.point.phi);
  result.weights = {found.point.p0, 1.0 - found.point.p0};
  result.at_optimum = found.eval.infos.front();
  result.converged = found.converged;
  result.evaluations = found.evaluations;
  return result;
}

I3AccResult i3_acc(const Isometry& v, const LabelSet& c, const LabelSet& d, const OptimizerSettings& settings) {
  const Tripartition t = tripartition(v, c, d);
  I3AccResult r;
  r.rc = accessible_info_channel(t.channel, t.c, settings);
  r.rd = accessible_info_channel(t.channel, t.d, settings);
  r.rcd = accessible_info_channel(t.channel, t.cd, settings);
  r.value = r.rc.value + r.rd.value - r.rcd.value;
  r.converged = r.rc.converged && r.rd.converged && r.rcd.converged;
  return r;
}

J3Summands j3_acc_fixed_encoding(const Isometry& v, const LabelSet& c, const LabelSet& d,
                                 const ClassicalQuantumEnsemble& ensemble, const OptimizerSettings& settings) {
  settings.validate();
  const Tripartition t = tripartition(v, c, d);
  if (ensemble.input_layout().total_dim() != v.input_layout().total_dim()) {
    throw DimensionError("ensemble does not match the isometry input");
  }
  std::vector<Matrix> inputs;
  for (const auto& s : ensemble.states()) inputs.push_back(s.matrix());
  const EncodingEval e =
      j3_summands(t.channel, t.c, t.d, t.cd, ensemble.weights(), inputs, settings, SearchEffort::full, {}, settings.seed);
  J3Summands out;
  out.value = e.value;
  out.rc = e.infos[0];
  out.rd = e.infos[1];
  out.rcd = e.infos[2];
  out.converged = e.converged;
  return out;
}

J3Optimum j3_acc_optimized(const Isometry& v, const LabelSet& c, const LabelSet& d, const OptimizerSettings& settings) {
  const Tripartition t = tripartition(v, c, d);
  const EncodingObjective objective = [&](const EncodingPoint& p, SearchEffort effort, const std::vector<Matrix>& warm,
                                          std::uint64_t seed) {
    return j3_summands(t.channel, t.c, t.d, t.cd, {p.p0, 1.0 - p.p0}, letters(p), settings, effort, warm, seed);
  };
  const EncodingSearch found = search_encodings(objective, settings, settings.optimize_weights_j3);

  J3Optimum result;
  result.value = found.eval.value;
  result.encoding = EncodingBasis(found.point.theta, found.point.phi);
  result.weights = {found.point.p0, 1.0 - found.point.p0};
  result.summands.value = found.eval.value;
  result.summands.rc = found.eval.infos[0];
  result.summands.rd = found.eval.infos[1];
  result.summands.rcd = found.eval.infos[2];
  result.summands.converged = found.eval.converged;
  result.converged = found.converged;
  result.evaluations = found.evaluations;
  return result;
}

OracleReport check_with_oracle(const AccessibleInfo& info, const OptimizerSettings& settings, std::uint64_t stream) {
  return measurement_oracle(info.ensemble, info.value, settings.oracle_samples, settings.oracle_margin,
                            derive_seed(settings.seed, stream));
}

}  // namespace scramble
