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

#include "scramble/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scramble/error.hpp"

namespace scramble {

namespace detail {

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix partial_trace(const Matrix& rho, const std::vector<std::size_t>& dims,
                     const std::vector<std::size_t>& keep) {
  const std::size_t n = dims.size();
  std::vector<std::size_t> strides(n, 1);
  for (std::size_t i = n; i-- > 1;) strides[i - 1] = strides[i] * dims[i];

  std::vector<bool> kept(n, false);
  for (auto k : keep) kept[k] = true;

  // Offsets of kept and traced multi-indices into the full index; the full
  // index is the sum of the two because row-major indexing is linear in digits.
  auto offsets = [&](bool want_kept) {
    std::vector<std::size_t> out{0};
    for (std::size_t i = 0; i < n; ++i) {
      if (kept[i] != want_kept) continue;
      std::vector<std::size_t> next;
      next.reserve(out.size() * dims[i]);
      for (auto base : out) {
        for (std::size_t d = 0; d < dims[i]; ++d) next.push_back(base + d * strides[i]);
      }
      out = std::move(next);
    }
    return out;
  };
  const auto kept_off = offsets(true);
  const auto traced_off = offsets(false);

  const auto dk = static_cast<Eigen::Index>(kept_off.size());
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (auto t : traced_off) {
        acc += rho(static_cast<Eigen::Index>(kept_off[i] + t), static_cast<Eigen::Index>(kept_off[j] + t));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

std::vector<std::size_t> permutation_index_map(const std::vector<std::size_t>& dims,
                                               const std::vector<std::size_t>& perm) {
  const std::size_t n = dims.size();
  std::vector<std::size_t> old_strides(n, 1);
  for (std::size_t i = n; i-- > 1;) old_strides[i - 1] = old_strides[i] * dims[i];
  std::size_t total = 1;
  for (auto d : dims) total *= d;

  std::vector<std::size_t> new_dims(n);
  for (std::size_t k = 0; k < n; ++k) new_dims[k] = dims[perm[k]];

  std::vector<std::size_t> map(total);
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t old = 0;
    for (std::size_t k = 0; k < n; ++k) old += digits[k] * old_strides[perm[k]];
    map[idx] = old;
    for (std::size_t k = n; k-- > 0;) {
      if (++digits[k] < new_dims[k]) break;
      digits[k] = 0;
    }
  }
  return map;
}

Vector permute(const Vector& v, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
  const auto map = permutation_index_map(dims, perm);
  Vector out(v.size());
  for (std::size_t i = 0; i < map.size(); ++i) out(static_cast<Eigen::Index>(i)) = v(static_cast<Eigen::Index>(map[i]));
  return out;
}

Matrix permute(const Matrix& m, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
  const auto map = permutation_index_map(dims, perm);
  const auto n = static_cast<Eigen::Index>(map.size());
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = m(static_cast<Eigen::Index>(map[i]), static_cast<Eigen::Index>(map[j]));
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix reduce(const Matrix& rho, const SubsystemLayout& layout, const LabelSet& keep) {
  auto idx = layout.indices_of(keep);
  std::vector<std::size_t> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PartitionError("label listed twice in partial trace");
  }
  Matrix reduced = partial_trace(rho, layout.dims(), sorted);
  if (sorted == idx) return reduced;
  // Reorder from ascending-position order to the order requested.
  std::vector<std::size_t> sub_dims;
  for (auto i : sorted) sub_dims.push_back(layout[i].dim);
  std::vector<std::size_t> perm;
  for (auto i : idx) perm.push_back(static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), i) - sorted.begin()));
  return permute(reduced, sub_dims, perm);
}

Eigen::VectorXd clamped_spectrum(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseMax(0.0).cwiseMin(1.0);
}

}  // namespace detail

namespace {

void require_dim(Eigen::Index got, std::size_t want, const char* what) {
  if (static_cast<std::size_t>(got) != want) {
    throw DimensionError(std::string(what) + ": size " + std::to_string(got) + " does not match layout dimension " +
                         std::to_string(want));
  }
}

std::vector<std::size_t> permutation_of(const SubsystemLayout& layout, const LabelSet& order) {
  if (order.size() != layout.size()) throw LayoutError("permutation must name every subsystem exactly once");
  auto perm = layout.indices_of(order);
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw LayoutError("permutation must name every subsystem exactly once");
  }
  return perm;
}

struct IsometryPlacement {
  std::vector<std::size_t> perm;  // state subsystems reordered as [before, acted, after]
  std::size_t before_dim = 1;
  std::size_t after_dim = 1;
  SubsystemLayout out_layout;
};

IsometryPlacement place(const Isometry& v, const SubsystemLayout& state) {
  const auto& in = v.input_layout();
  std::vector<std::size_t> acted;
  for (const auto& s : in.subsystems()) {
    auto pos = state.find(s.label);
    if (!pos) throw DimensionError("state " + state.to_string() + " lacks isometry input '" + s.label + "'");
    if (state[*pos].dim != s.dim) {
      throw DimensionError("subsystem '" + s.label + "' has dimension " + std::to_string(state[*pos].dim) +
                           " but the isometry expects " + std::to_string(s.dim));
    }
    acted.push_back(*pos);
  }
  const std::size_t first = acted.empty() ? 0 : *std::min_element(acted.begin(), acted.end());
  auto is_acted = [&](std::size_t i) { return std::find(acted.begin(), acted.end(), i) != acted.end(); };

  IsometryPlacement p;
  std::vector<Subsystem> before, after;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (is_acted(i)) continue;
    if (i < first) {
      before.push_back(state[i]);
      p.before_dim *= state[i].dim;
    } else {
      after.push_back(state[i]);
      p.after_dim *= state[i].dim;
    }
  }
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (!is_acted(i) && i < first) p.perm.push_back(i);
  }
  p.perm.insert(p.perm.end(), acted.begin(), acted.end());
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (!is_acted(i) && i >= first) p.perm.push_back(i);
  }
  std::vector<Subsystem> out = before;
  out.insert(out.end(), v.output_layout().subsystems().begin(), v.output_layout().subsystems().end());
  out.insert(out.end(), after.begin(), after.end());
  p.out_layout = SubsystemLayout(std::move(out));
  return p;
}

Matrix padded(const Isometry& v, const IsometryPlacement& p) {
  Matrix full = v.matrix();
  if (p.before_dim > 1) {
    full = detail::kron(Matrix::Identity(static_cast<Eigen::Index>(p.before_dim), static_cast<Eigen::Index>(p.before_dim)), full);
  }
  if (p.after_dim > 1) {
    full = detail::kron(full, Matrix::Identity(static_cast<Eigen::Index>(p.after_dim), static_cast<Eigen::Index>(p.after_dim)));
  }
  return full;
}

std::vector<Eigenpair> decompose(const Matrix& m, const SubsystemLayout& layout) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  const auto n = m.rows();
  std::vector<Eigenpair> out;
  out.reserve(static_cast<std::size_t>(n));
  // Eigen sorts ascending.
  for (Eigen::Index k = n; k-- > 0;) {
    out.push_back({solver.eigenvalues()(k), Ket::normalized(solver.eigenvectors().col(k), layout)});
  }
  return out;
}

}  // namespace

Ket::Ket(Vector amplitudes, SubsystemLayout layout) : amplitudes_(std::move(amplitudes)), layout_(std::move(layout)) {
  require_dim(amplitudes_.size(), layout_.total_dim(), "ket");
  if (std::abs(amplitudes_.norm() - 1.0) > kConstructionTolerance) {
    throw ValidationError("ket is not normalized (norm " + std::to_string(amplitudes_.norm()) + ")");
  }
}

Ket Ket::basis(const SubsystemLayout& layout, const std::vector<std::size_t>& digits) {
  if (digits.size() != layout.size()) throw DimensionError("basis ket needs one digit per subsystem");
  const auto strides = layout.strides();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= layout[i].dim) throw DimensionError("basis digit out of range for '" + layout[i].label + "'");
    idx += digits[i] * strides[i];
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  v(static_cast<Eigen::Index>(idx)) = 1.0;
  return Ket(std::move(v), layout);
}

Ket Ket::normalized(Vector amplitudes, SubsystemLayout layout) {
  const double n = amplitudes.norm();
  if (n == 0.0) throw ValidationError("cannot normalize the zero vector");
  return Ket(amplitudes / n, std::move(layout));
}

Ket Ket::relabeled(const LabelSet& labels) const { return Ket(amplitudes_, layout_.relabeled(labels)); }

DensityMatrix::DensityMatrix(Matrix matrix, SubsystemLayout layout)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
  if (matrix_.rows() != matrix_.cols()) throw DimensionError("density matrix must be square");
  require_dim(matrix_.rows(), layout_.total_dim(), "density matrix");
  if (detail::hermiticity_defect(matrix_) > kConstructionTolerance) {
    throw ValidationError("density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > kConstructionTolerance) {
    throw ValidationError("density matrix trace is " + std::to_string(matrix_.trace().real()) + ", not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kArithmeticTolerance) {
    throw ValidationError("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(const SubsystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d), layout);
}

DensityMatrix DensityMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows,
                                       SubsystemLayout layout) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) throw DimensionError("density matrix literal must be square");
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return DensityMatrix(std::move(m), std::move(layout));
}

DensityMatrix DensityMatrix::relabeled(const LabelSet& labels) const {
  return DensityMatrix(matrix_, layout_.relabeled(labels));
}

Isometry::Isometry(Matrix matrix, SubsystemLayout input, SubsystemLayout output)
    : matrix_(std::move(matrix)), input_(std::move(input)), output_(std::move(output)) {
  require_dim(matrix_.cols(), input_.total_dim(), "isometry columns");
  require_dim(matrix_.rows(), output_.total_dim(), "isometry rows");
  if (output_.total_dim() < input_.total_dim()) {
    throw DimensionError("isometry output dimension is smaller than its input dimension");
  }
  const Matrix gram = matrix_.adjoint() * matrix_;
  const auto n = gram.rows();
  if ((gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > kConstructionTolerance) {
    throw ValidationError("matrix is not an isometry (V^dagger V != I)");
  }
}

Isometry Isometry::identity(const SubsystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  return Isometry(Matrix::Identity(d, d), layout, layout);
}

Isometry Isometry::with_output_labels(const LabelSet& labels) const {
  return Isometry(matrix_, input_, output_.relabeled(labels));
}

Isometry Isometry::with_input_labels(const LabelSet& labels) const {
  return Isometry(matrix_, input_.relabeled(labels), output_);
}

Ket tensor_product(const Ket& a, const Ket& b) {
  auto layout = a.layout().concat(b.layout());
  Vector v(static_cast<Eigen::Index>(layout.total_dim()));
  const auto nb = b.amplitudes().size();
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) v.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
  return Ket(std::move(v), std::move(layout));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  auto layout = a.layout().concat(b.layout());
  return DensityMatrix(detail::kron(a.matrix(), b.matrix()), std::move(layout));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const LabelSet& keep) {
  if (keep.empty()) throw LayoutError("partial trace must keep at least one subsystem");
  auto idx = rho.layout().indices_of(keep);
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw LayoutError("label listed twice in partial trace");
  }
  LabelSet ordered;
  for (auto i : idx) ordered.push_back(rho.layout()[i].label);
  Matrix reduced = detail::partial_trace(rho.matrix(), rho.layout().dims(), idx);
  // Symmetrize away roundoff before re-validation.
  reduced = 0.5 * (reduced + reduced.adjoint()).eval();
  return DensityMatrix(std::move(reduced), rho.layout().select(ordered));
}

DensityMatrix projector(const Ket& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint(), psi.layout());
}

Ket maximally_entangled_state(std::size_t d, const std::string& a, const std::string& b) {
  if (d < 2) throw DimensionError("maximally entangled state needs d >= 2");
  SubsystemLayout layout{{a, d}, {b, d}};
  const auto dd = static_cast<Eigen::Index>(d);
  Vector v = Vector::Zero(dd * dd);
  for (Eigen::Index i = 0; i < dd; ++i) v(i * dd + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return Ket(std::move(v), std::move(layout));
}

Ket apply_isometry(const Isometry& v, const Ket& state) {
  auto p = place(v, state.layout());
  Vector psi = detail::permute(state.amplitudes(), state.layout().dims(), p.perm);
  Vector out = padded(v, p) * psi;
  return Ket(std::move(out), std::move(p.out_layout));
}

DensityMatrix apply_isometry(const Isometry& v, const DensityMatrix& state) {
  auto p = place(v, state.layout());
  Matrix rho = detail::permute(state.matrix(), state.layout().dims(), p.perm);
  const Matrix full = padded(v, p);
  Matrix out = full * rho * full.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out), std::move(p.out_layout));
}

Ket permute(const Ket& psi, const LabelSet& order) {
  auto perm = permutation_of(psi.layout(), order);
  return Ket(detail::permute(psi.amplitudes(), psi.layout().dims(), perm), psi.layout().select(order));
}

DensityMatrix permute(const DensityMatrix& rho, const LabelSet& order) {
  auto perm = permutation_of(rho.layout(), order);
  return DensityMatrix(detail::permute(rho.matrix(), rho.layout().dims(), perm), rho.layout().select(order));
}

std::vector<Eigenpair> eigen_decomposition(const DensityMatrix& rho) { return decompose(rho.matrix(), rho.layout()); }

std::vector<Eigenpair> eigen_decomposition(const Matrix& hermitian, const SubsystemLayout& layout) {
  if (hermitian.rows() != hermitian.cols()) throw DimensionError("eigen decomposition needs a square matrix");
  require_dim(hermitian.rows(), layout.total_dim(), "operator");
  if (detail::hermiticity_defect(hermitian) > kConstructionTolerance) {
    throw ValidationError("eigen decomposition requires a Hermitian operator");
  }
  return decompose(hermitian, layout);
}

}  // namespace scramble
