// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYFIN_HOMGEO_HPP
#define CYFIN_HOMGEO_HPP

#include "cyfin/norms.hpp"

namespace cyfin {

/// Reductive decomposition together with a Minkowski norm on m.  All vector
/// arguments of the geometry pipeline are m-coordinates.
class HomogeneousModel {
 public:
  HomogeneousModel(ReductiveDecomposition decomposition, NormModel norm,
                   bool chain_basis_declared = false);

  const ReductiveDecomposition& decomposition() const { return decomposition_; }
  const LieAlgebra& algebra() const { return decomposition_.algebra(); }
  const NormModel& norm() const { return norm_; }
  int dim_m() const { return decomposition_.dim_m(); }
  bool trivial_isotropy() const { return decomposition_.trivial_isotropy(); }

  /// Set when the defining basis is declared triangular (a chain of ideals),
  /// enabling the structure-constant cyclicity criterion.
  bool chain_basis_declared() const { return chain_basis_declared_; }

 private:
  ReductiveDecomposition decomposition_;
  NormModel norm_;
  bool chain_basis_declared_;
};

/// Spray vector field: the solution of <eta(y), u>_y = <y, [u, y]_m>_y.
Vec spray_eta(const HomogeneousModel& m, const Vec& y);

/// Connection operator: the solution of
///   2<N(y,v),u>_y = <[u,v]_m,y>_y + <[u,y]_m,v>_y + <[v,y]_m,u>_y - 2C_y(u,v,eta(y)).
Vec connection_N(const HomogeneousModel& m, const Vec& y, const Vec& v);

struct CurvatureOperator {
  Vec base;
  Mat matrix;
};

/// Riemann curvature operator
///   R_y(u) = D_eta N(y,u) - N(y,N(y,u)) + N(y,[y,u]) - [y,N(y,u)],
/// where D_eta N is the directional derivative of y' -> N(y',u) along eta(y).
/// Only available for trivial isotropy (left-invariant metrics on G).
CurvatureOperator riemann_operator(const HomogeneousModel& m, const Vec& y);

/// K(y,u) = <R_y u, u>_y / (F(y)^2 <u,u>_y - <y,u>_y^2).
double flag_curvature(const HomogeneousModel& m, const Vec& y, const Vec& u);

double ricci_scalar(const HomogeneousModel& m, const Vec& y);

}  // namespace cyfin

#endif
