// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYFIN_LIE_ALGEBRA_HPP
#define CYFIN_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cyfin/errors.hpp"

namespace cyfin {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Relative singular-value threshold for all rank / null-space decisions.
inline constexpr double kRankTol = 1e-10;

/// Hard engineering cap on the algebra dimension.
inline constexpr int kMaxDim = 64;

/// Finite-dimensional real Lie algebra given by dense structure constants
/// c_ij^k, meaning [e_i, e_j] = sum_k c_ij^k e_k.  Antisymmetry and the
/// Jacobi identity are validated at construction; the Jacobi residual is
/// cached as the validity certificate.
class LieAlgebra {
 public:
  /// constants[k](i,j) = c_ij^k.  jacobi_tol_scale is the accepted residual
  /// relative to (1 + max|c|)^2; the strict default is the normal path, a
  /// looser value is an explicit opt-in for deliberately inconsistent
  /// bracket tables used in counterexample tests.
  LieAlgebra(int dim, std::vector<Mat> constants, std::vector<std::string> labels = {},
             double jacobi_tol_scale = 1e-12);

  static LieAlgebra abelian(int dim);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double structure_constant(int i, int j, int k) const { return constants_[k](i, j); }
  const std::vector<Mat>& constants() const { return constants_; }

  /// Largest |c_ij^k|.
  double max_structure_constant() const { return max_c_; }

  /// max over basis triples of ||[[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]||_inf,
  /// computed once at construction.
  double jacobi_residual() const { return jacobi_residual_; }

  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of ad(y): v -> [y, v].
  Mat ad(const Vec& y) const;

  /// Matrix of v -> [e_i, v].
  Mat ad_basis(int i) const;

 private:
  int dim_;
  std::vector<Mat> constants_;
  std::vector<std::string> labels_;
  double max_c_ = 0.0;
  double jacobi_residual_ = 0.0;
};

/// Linear subspace of R^n, stored with an orthonormalized basis.
class Subspace {
 public:
  Subspace() : Subspace(0) {}

  /// Zero subspace.
  explicit Subspace(int ambient_dim);

  /// Span of the given column vectors; columns must be linearly independent.
  static Subspace span(const Mat& columns);

  /// Span where dependent columns are silently dropped (used for computed
  /// spans like derived algebras).
  static Subspace span_of(const Mat& columns);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Mat& basis() const { return basis_; }

  /// Orthogonal projection residual ||v - proj(v)||.
  double distance(const Vec& v) const;

  bool contains(const Vec& v, double tol) const { return distance(v) <= tol; }

 private:
  Mat basis_;  // ambient_dim x dim, orthonormal columns
};

struct Classification {
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  Subspace derived;
};

Vec jacobi_defect(const LieAlgebra& L, int i, int j, int k);

/// Orthonormal basis of the center {y : [y, g] = 0}.
Subspace center(const LieAlgebra& L);

/// Derived algebra plus the abelian / nilpotent / solvable predicates
/// (lower-central and derived series rank tests).
Classification classify(const LieAlgebra& L);

/// Block direct sum; cross brackets vanish.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// True when span{e_1..e_i} is an ideal for every i (the triangular basis
/// hypothesis of the structure-constant cyclicity criterion).
bool has_ideal_chain(const LieAlgebra& L, double tol = 1e-10);

/// Splitting g = h + m with [h,h] subset h and [h,m] subset m.  Projection
/// onto m solves the combined-basis linear system, so h and m need not be
/// orthogonal to each other.
class ReductiveDecomposition {
 public:
  ReductiveDecomposition(LieAlgebra algebra, Subspace h, Subspace m);

  /// Trivial decomposition g = 0 + g with the standard basis on m.
  static ReductiveDecomposition trivial(LieAlgebra algebra);

  const LieAlgebra& algebra() const { return algebra_; }
  const Subspace& h() const { return h_; }
  const Subspace& m() const { return m_; }
  int dim_m() const { return m_.dim(); }
  bool trivial_isotropy() const { return h_.dim() == 0; }

  /// m-component of an ambient vector, in m-coordinates.
  Vec project_m(const Vec& ambient) const;
  Vec to_ambient(const Vec& m_coords) const;

  /// [x, y]_m for x, y in m-coordinates; result in m-coordinates.
  Vec bracket_m(const Vec& x, const Vec& y) const;

  /// Matrix of v -> [e^m_i, v]_m on m-coordinates.
  Mat ad_m_basis(int i) const;

 private:
  LieAlgebra algebra_;
  Subspace h_, m_;
  Eigen::PartialPivLU<Mat> combined_;  // [m | h] factorized for projections
};

}  // namespace cyfin

#endif
