// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyfin/lie_algebra.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace cyfin {

namespace {

Mat orthonormalize(const Mat& columns, double rel_tol, bool require_independent) {
  if (columns.cols() == 0) return columns;
  Eigen::JacobiSVD<Mat> svd(columns, Eigen::ComputeThinU);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > rel_tol * smax) ++rank;
  if (require_independent && rank != columns.cols())
    throw InputError("subspace basis vectors are linearly dependent");
  return svd.matrixU().leftCols(rank);
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, std::vector<Mat> constants, std::vector<std::string> labels,
                       double jacobi_tol_scale)
    : dim_(dim), constants_(std::move(constants)), labels_(std::move(labels)) {
  if (dim < 1 || dim > kMaxDim) throw InputError("Lie algebra dimension must be in [1, 64]");
  if (static_cast<int>(constants_.size()) != dim)
    throw InputError("structure constants: expected one matrix per basis vector");
  for (const Mat& c : constants_) {
    if (c.rows() != dim || c.cols() != dim)
      throw InputError("structure constants: matrix shape mismatch");
  }
  if (labels_.empty()) {
    for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(labels_.size()) != dim) throw InputError("basis label count mismatch");

  for (const Mat& c : constants_) {
    max_c_ = std::max(max_c_, c.cwiseAbs().maxCoeff());
    double asym = (c + c.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * (1.0 + max_c_))
      throw InputError("structure constants are not antisymmetric in (i, j)");
  }

  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k)
        jacobi_residual_ =
            std::max(jacobi_residual_, jacobi_defect(*this, i, j, k).cwiseAbs().maxCoeff());
  double scale = (1.0 + max_c_) * (1.0 + max_c_);
  if (jacobi_residual_ > jacobi_tol_scale * scale)
    throw JacobiError("structure constants violate the Jacobi identity (residual " +
                      std::to_string(jacobi_residual_) + ")");
}

LieAlgebra LieAlgebra::abelian(int dim) {
  return LieAlgebra(dim, std::vector<Mat>(dim, Mat::Zero(dim, dim)));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InputError("bracket: dimension mismatch");
  Vec out(dim_);
  for (int k = 0; k < dim_; ++k) out[k] = x.dot(constants_[k] * y);
  return out;
}

Mat LieAlgebra::ad(const Vec& y) const {
  if (y.size() != dim_) throw InputError("ad: dimension mismatch");
  Mat a(dim_, dim_);
  for (int k = 0; k < dim_; ++k) a.row(k) = y.transpose() * constants_[k];
  return a;
}

Mat LieAlgebra::ad_basis(int i) const {
  Mat a(dim_, dim_);
  for (int k = 0; k < dim_; ++k) a.row(k) = constants_[k].row(i);
  return a;
}

Vec jacobi_defect(const LieAlgebra& L, int i, int j, int k) {
  Vec ei = Vec::Unit(L.dim(), i), ej = Vec::Unit(L.dim(), j), ek = Vec::Unit(L.dim(), k);
  return L.bracket(L.bracket(ei, ej), ek) + L.bracket(L.bracket(ej, ek), ei) +
         L.bracket(L.bracket(ek, ei), ej);
}

Subspace::Subspace(int ambient_dim) : basis_(Mat::Zero(ambient_dim, 0)) {
  if (ambient_dim < 0) throw InputError("subspace: negative ambient dimension");
}

Subspace Subspace::span(const Mat& columns) {
  Subspace s(static_cast<int>(columns.rows()));
  s.basis_ = orthonormalize(columns, kRankTol, true);
  return s;
}

Subspace Subspace::span_of(const Mat& columns) {
  Subspace s(static_cast<int>(columns.rows()));
  s.basis_ = orthonormalize(columns, kRankTol, false);
  return s;
}

double Subspace::distance(const Vec& v) const {
  if (v.size() != basis_.rows()) throw InputError("subspace: dimension mismatch");
  if (basis_.cols() == 0) return v.norm();
  return (v - basis_ * (basis_.transpose() * v)).norm();
}

Subspace center(const LieAlgebra& L) {
  const int n = L.dim();
  // Stack the maps y -> [y, e_j]; the center is the common null space.
  Mat stacked(n * n, n);
  for (int j = 0; j < n; ++j) {
    Mat bj(n, n);  // bj(k, i) = c_ij^k
    for (int k = 0; k < n; ++k) bj.row(k) = L.constants()[k].col(j).transpose();
    stacked.middleRows(j * n, n) = bj;
  }
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullV);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > kRankTol * smax) ++rank;
  Subspace s(n);
  if (rank < n) return Subspace::span(svd.matrixV().rightCols(n - rank));
  return s;
}

namespace {

// Span of all brackets [a, b] with a over columns of A and b over columns of B.
Subspace bracket_span(const LieAlgebra& L, const Mat& A, const Mat& B) {
  Mat cols(L.dim(), A.cols() * B.cols());
  int c = 0;
  for (int i = 0; i < A.cols(); ++i)
    for (int j = 0; j < B.cols(); ++j) cols.col(c++) = L.bracket(A.col(i), B.col(j));
  return Subspace::span_of(cols);
}

}  // namespace

Classification classify(const LieAlgebra& L) {
  const int n = L.dim();
  Mat id = Mat::Identity(n, n);
  Classification result;
  result.derived = bracket_span(L, id, id);
  result.abelian = result.derived.dim() == 0;

  // Lower central series g, [g,g], [g,[g,g]], ...
  Subspace lower = result.derived;
  result.nilpotent = true;
  for (int step = 0; step < n && lower.dim() > 0; ++step)
    lower = bracket_span(L, id, lower.basis());
  result.nilpotent = lower.dim() == 0;

  // Derived series g, [g,g], [[g,g],[g,g]], ...
  Subspace derived = result.derived;
  for (int step = 0; step < n && derived.dim() > 0; ++step)
    derived = bracket_span(L, derived.basis(), derived.basis());
  result.solvable = derived.dim() == 0;
  return result;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int n1 = a.dim(), n2 = b.dim(), n = n1 + n2;
  std::vector<Mat> constants(n, Mat::Zero(n, n));
  for (int k = 0; k < n1; ++k) constants[k].topLeftCorner(n1, n1) = a.constants()[k];
  for (int k = 0; k < n2; ++k) constants[n1 + k].bottomRightCorner(n2, n2) = b.constants()[k];
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  return LieAlgebra(n, std::move(constants), std::move(labels));
}

bool has_ideal_chain(const LieAlgebra& L, double tol) {
  const int n = L.dim();
  double scale = tol * (1.0 + L.max_structure_constant());
  for (int i = 1; i < n; ++i) {
    // span{e_1..e_i} must absorb brackets with everything.
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < i; ++p) {
        Vec br = L.bracket(Vec::Unit(n, j), Vec::Unit(n, p));
        if (br.tail(n - i).cwiseAbs().maxCoeff() > scale) return false;
      }
  }
  return true;
}

ReductiveDecomposition::ReductiveDecomposition(LieAlgebra algebra, Subspace h, Subspace m)
    : algebra_(std::move(algebra)), h_(std::move(h)), m_(std::move(m)) {
  const int n = algebra_.dim();
  if (h_.ambient_dim() != n || m_.ambient_dim() != n)
    throw InputError("reductive decomposition: ambient dimension mismatch");
  if (h_.dim() + m_.dim() != n)
    throw StateError("reductive decomposition: dim h + dim m != dim g");

  Mat combined(n, n);
  combined.leftCols(m_.dim()) = m_.basis();
  combined.rightCols(h_.dim()) = h_.basis();
  Eigen::JacobiSVD<Mat> svd(combined);
  if (svd.singularValues()[n - 1] <= kRankTol * svd.singularValues()[0])
    throw StateError("reductive decomposition: h + m does not span g");
  combined_ = Eigen::PartialPivLU<Mat>(combined);

  double tol = 1e-9 * (1.0 + algebra_.max_structure_constant());
  for (int i = 0; i < h_.dim(); ++i) {
    for (int j = 0; j < h_.dim(); ++j) {
      Vec br = algebra_.bracket(h_.basis().col(i), h_.basis().col(j));
      if (h_.distance(br) > tol) throw StateError("decomposition: h is not a subalgebra");
    }
    for (int j = 0; j < m_.dim(); ++j) {
      Vec br = algebra_.bracket(h_.basis().col(i), m_.basis().col(j));
      if (m_.distance(br) > tol) throw StateError("decomposition: [h, m] is not contained in m");
    }
  }
}

ReductiveDecomposition ReductiveDecomposition::trivial(LieAlgebra algebra) {
  int n = algebra.dim();
  return ReductiveDecomposition(std::move(algebra), Subspace(n),
                                Subspace::span(Mat::Identity(n, n)));
}

Vec ReductiveDecomposition::project_m(const Vec& ambient) const {
  if (ambient.size() != algebra_.dim()) throw InputError("project_m: dimension mismatch");
  return combined_.solve(ambient).head(m_.dim());
}

Vec ReductiveDecomposition::to_ambient(const Vec& m_coords) const {
  if (m_coords.size() != m_.dim()) throw InputError("to_ambient: dimension mismatch");
  return m_.basis() * m_coords;
}

Vec ReductiveDecomposition::bracket_m(const Vec& x, const Vec& y) const {
  return project_m(algebra_.bracket(to_ambient(x), to_ambient(y)));
}

Mat ReductiveDecomposition::ad_m_basis(int i) const {
  Mat a(m_.dim(), m_.dim());
  Vec ei = m_.basis().col(i);
  for (int j = 0; j < m_.dim(); ++j)
    a.col(j) = project_m(algebra_.bracket(ei, m_.basis().col(j)));
  return a;
}

}  // namespace cyfin
