// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyfin/homgeo.hpp"

#include <Eigen/Cholesky>
#include <cmath>

namespace cyfin {

namespace {

Eigen::LLT<Mat> factor_g(const NormModel& norm, const Vec& y) {
  Eigen::LLT<Mat> llt(norm.fundamental_tensor(y));
  if (llt.info() != Eigen::Success)
    throw ConvexityError("fundamental tensor lost positive definiteness at the base direction");
  return llt;
}

void check_y(const HomogeneousModel& m, const Vec& y) {
  if (y.size() != m.dim_m()) throw InputError("base direction has wrong dimension");
  if (y.norm() == 0.0) throw DomainError("base direction y must be nonzero");
}

Vec connection_with(const HomogeneousModel& m, const Vec& y, const Vec& v,
                    const Eigen::LLT<Mat>& g, const Mat& gm, const Vec& eta) {
  const auto& d = m.decomposition();
  const int n = m.dim_m();
  bool with_cartan = !m.norm().is_riemannian() && eta.norm() > 1e-14;
  Vec rhs(n);
  Vec vy = d.bracket_m(v, y);
  for (int i = 0; i < n; ++i) {
    Vec ei = Vec::Unit(n, i);
    Vec uv = d.bracket_m(ei, v);
    Vec uy = d.bracket_m(ei, y);
    rhs[i] = uv.dot(gm * y) + uy.dot(gm * v) + vy.dot(gm * ei);
    if (with_cartan) rhs[i] -= 2.0 * m.norm().cartan(y, ei, v, eta);
  }
  return g.solve(0.5 * rhs);
}

}  // namespace

HomogeneousModel::HomogeneousModel(ReductiveDecomposition decomposition, NormModel norm,
                                   bool chain_basis_declared)
    : decomposition_(std::move(decomposition)),
      norm_(std::move(norm)),
      chain_basis_declared_(chain_basis_declared) {
  if (norm_.dim() != decomposition_.dim_m())
    throw InputError("norm dimension does not match dim m");
  if (!decomposition_.trivial_isotropy()) {
    double res = invariance_residual(norm_, decomposition_);
    if (res > 1e-8)
      throw StateError("norm is not Ad(H)-invariant (residual " + std::to_string(res) + ")");
  }
}

Vec spray_eta(const HomogeneousModel& m, const Vec& y) {
  check_y(m, y);
  const auto& d = m.decomposition();
  const int n = m.dim_m();
  Mat gm = m.norm().fundamental_tensor(y);
  Eigen::LLT<Mat> llt(gm);
  if (llt.info() != Eigen::Success)
    throw ConvexityError("fundamental tensor lost positive definiteness at the base direction");
  Vec rhs(n);
  Vec gy = gm * y;
  for (int i = 0; i < n; ++i) rhs[i] = gy.dot(d.bracket_m(Vec::Unit(n, i), y));
  return llt.solve(rhs);
}

Vec connection_N(const HomogeneousModel& m, const Vec& y, const Vec& v) {
  check_y(m, y);
  if (v.size() != m.dim_m()) throw InputError("connection operator: v has wrong dimension");
  Mat gm = m.norm().fundamental_tensor(y);
  Eigen::LLT<Mat> llt(gm);
  if (llt.info() != Eigen::Success)
    throw ConvexityError("fundamental tensor lost positive definiteness at the base direction");
  return connection_with(m, y, v, llt, gm, spray_eta(m, y));
}

CurvatureOperator riemann_operator(const HomogeneousModel& m, const Vec& y) {
  check_y(m, y);
  if (!m.trivial_isotropy())
    throw UnsupportedError(
        "Riemann curvature is only computed for trivial isotropy (left-invariant metrics)");
  const auto& d = m.decomposition();
  const int n = m.dim_m();

  Vec eta = spray_eta(m, y);
  double eta_norm = eta.norm();
  bool flat_spray = eta_norm <= 1e-13 * (1.0 + y.norm());

  auto n_columns = [&](const Vec& base) {
    Mat cols(n, n);
    Mat gm = m.norm().fundamental_tensor(base);
    Eigen::LLT<Mat> llt(gm);
    if (llt.info() != Eigen::Success)
      throw ConvexityError("fundamental tensor lost positive definiteness at the base direction");
    Vec base_eta = spray_eta(m, base);
    for (int i = 0; i < n; ++i)
      cols.col(i) = connection_with(m, base, Vec::Unit(n, i), llt, gm, base_eta);
    return cols;
  };

  Mat n_at_y = n_columns(y);

  // Directional derivative of y' -> N(y', u) along eta(y); exact zero when
  // the spray vanishes.  The step moves a fixed fraction of |y| along the
  // unit spray direction so the truncation error is scale invariant.
  Mat d_eta_n = Mat::Zero(n, n);
  if (!flat_spray) {
    Vec dir = eta / eta_norm;
    double h = 1e-4 * y.norm();
    d_eta_n = (n_columns(y + h * dir) - n_columns(y - h * dir)) * (eta_norm / (2.0 * h));
  }

  Mat r(n, n);
  for (int i = 0; i < n; ++i) {
    Vec u = Vec::Unit(n, i);
    Vec nu = n_at_y.col(i);
    r.col(i) = d_eta_n.col(i) - n_at_y * nu + n_at_y * d.bracket_m(y, u) - d.bracket_m(y, nu);
  }
  return CurvatureOperator{y, r};
}

double flag_curvature(const HomogeneousModel& m, const Vec& y, const Vec& u) {
  check_y(m, y);
  if (u.size() != m.dim_m()) throw InputError("flag curvature: u has wrong dimension");
  Mat gm = m.norm().fundamental_tensor(y);
  double f = m.norm().value(y);
  double gu = u.dot(gm * u);
  double gyu = y.dot(gm * u);
  double denom = f * f * gu - gyu * gyu;
  double scale = f * f * gu;
  if (denom <= 1e-14 * (1.0 + scale))
    throw DegenerateFlagError("flag (y, u) is degenerate (u parallel to y)");
  CurvatureOperator r = riemann_operator(m, y);
  return u.dot(gm * (r.matrix * u)) / denom;
}

double ricci_scalar(const HomogeneousModel& m, const Vec& y) {
  return riemann_operator(m, y).matrix.trace();
}

}  // namespace cyfin
