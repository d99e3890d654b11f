// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference for left-invariant Riemannian metrics on Lie groups,
// built directly from the Koszul formula.  Test-only: nothing here touches
// the spray/connection pipeline it is used to verify.

#ifndef CYFIN_TESTS_KOSZUL_HPP
#define CYFIN_TESTS_KOSZUL_HPP

#include <Eigen/Cholesky>

#include "cyfin/lie_algebra.hpp"

namespace cyfin::oracle {

/// nabla_x y for left-invariant fields:
///   <nabla_x y, z> = (1/2)(<[x,y],z> - <[y,z],x> + <[z,x],y>).
inline Vec levi_civita(const LieAlgebra& L, const Mat& gram, const Vec& x, const Vec& y) {
  const int n = L.dim();
  Vec rhs(n);
  for (int i = 0; i < n; ++i) {
    Vec z = Vec::Unit(n, i);
    rhs[i] = 0.5 * (z.dot(gram * L.bracket(x, y)) - x.dot(gram * L.bracket(y, z)) +
                    y.dot(gram * L.bracket(z, x)));
  }
  return Eigen::LLT<Mat>(gram).solve(rhs);
}

inline Vec spray(const LieAlgebra& L, const Mat& gram, const Vec& y) {
  return levi_civita(L, gram, y, y);
}

/// N(y, v) corresponds to nabla_v y.
inline Vec connection(const LieAlgebra& L, const Mat& gram, const Vec& y, const Vec& v) {
  return levi_civita(L, gram, v, y);
}

/// R_y(u) = R(u, y)y with R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z
/// - nabla_{[x,y]} z, everything expanded on left-invariant fields.
inline Vec riemann(const LieAlgebra& L, const Mat& gram, const Vec& y, const Vec& u) {
  Vec nyy = levi_civita(L, gram, y, y);
  Vec nuy = levi_civita(L, gram, u, y);
  return levi_civita(L, gram, u, nyy) - levi_civita(L, gram, y, nuy) -
         levi_civita(L, gram, L.bracket(u, y), y);
}

inline Mat riemann_matrix(const LieAlgebra& L, const Mat& gram, const Vec& y) {
  const int n = L.dim();
  Mat r(n, n);
  for (int i = 0; i < n; ++i) r.col(i) = riemann(L, gram, y, Vec::Unit(n, i));
  return r;
}

inline double sectional(const LieAlgebra& L, const Mat& gram, const Vec& y, const Vec& u) {
  double yy = y.dot(gram * y), uu = u.dot(gram * u), yu = y.dot(gram * u);
  return u.dot(gram * riemann(L, gram, y, u)) / (yy * uu - yu * yu);
}

inline double ricci(const LieAlgebra& L, const Mat& gram, const Vec& y) {
  return riemann_matrix(L, gram, y).trace();
}

}  // namespace cyfin::oracle

#endif
