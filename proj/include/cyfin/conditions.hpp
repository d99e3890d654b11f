// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYFIN_CONDITIONS_HPP
#define CYFIN_CONDITIONS_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cyfin/homgeo.hpp"
#include "cyfin/sampling.hpp"

namespace cyfin {

enum class Verdict { holds, fails, inconclusive };

std::string to_string(Verdict v);

struct Witness {
  Vec y, x, z;
};

/// Outcome of a condition check.  When `exact` is set the verdict was decided
/// by a finite criterion (basis multilinearity or polynomial expansion)
/// rather than sampling; `worst_residual` is still the largest residual seen,
/// re-evaluable at the stored witness.
struct ConditionReport {
  std::string condition;
  Verdict verdict = Verdict::inconclusive;
  double worst_residual = 0.0;
  Witness witness;
  long samples_used = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool exact = false;
  nlohmann::json extra;  // optional auxiliary data (e.g. the triangular-basis criterion)

  nlohmann::json to_json() const;
};

/// Normalized residual of the cyclic sum
///   <[x,y]_m, z>_y + <[y,z]_m, x>_y + <[z,x]_m, y>_y
/// at a single triple; arguments in m-coordinates.
double cyclic_residual(const HomogeneousModel& m, const Vec& x, const Vec& y, const Vec& z);

/// Cyclicity check.  Riemannian norms are decided exactly on basis triples;
/// (alpha,beta) Douglas metrics get the exact polynomial reduction when its
/// hypotheses hold; everything else is sampled per plan.
ConditionReport check_cyclic(const HomogeneousModel& m, const SamplingPlan& plan = {});

ConditionReport check_naturally_reductive(const HomogeneousModel& m,
                                          const SamplingPlan& plan = {});

/// Exact Douglas criterion for (alpha,beta) norms: alpha([m,m]_m, X) = 0.
ConditionReport check_douglas_ab(const HomogeneousModel& m);

/// Exact symmetric-pair check: [m,m] contained in h.
ConditionReport check_symmetric(const ReductiveDecomposition& d, double tol = 1e-10);

/// The polynomial
///   Psi(u,v,y) = a(y,[y,u]_m)(a(y,y)a(X,v) - a(y,v)a(X,y))
///              + a(y,[v,y]_m)(a(y,y)a(X,u) - a(y,u)a(X,y)).
double psi_value(const AlphaBetaNorm& norm, const ReductiveDecomposition& d, const Vec& u,
                 const Vec& v, const Vec& y);

/// Largest coefficient of the multilinear (polarized) expansion of Psi; the
/// polynomial vanishes identically iff this is ~0.  Exact and finite.
double psi_polarization_residual(const AlphaBetaNorm& norm, const ReductiveDecomposition& d);

struct SubcheckResult {
  enum class Status { pass, fail, skipped };
  std::string name;
  Status status = Status::skipped;
  double residual = 0.0;
  std::string detail;
};

/// Cross-checks of the structural theorems on one model:
///   (a) cyclic + naturally reductive implies symmetric,
///   (b) directions y with <[g,g],y>_y ~ 0 on cyclic Lie groups give
///       eta(y)=0, N(y,.)=-ad(y), R_y=-ad(y)^2, ad(y) self-adjoint,
///   (c) for (alpha,beta) Douglas models the cyclic verdict matches Psi == 0,
///   (d) a cyclic non-abelian Lie group cannot be flat: some sampled flag
///       curvature is nonzero.
struct TheoremSuiteReport {
  ConditionReport cyclic;
  ConditionReport naturally_reductive;
  ConditionReport symmetric;
  std::optional<ConditionReport> douglas;
  std::vector<SubcheckResult> subchecks;

  bool consistent() const;
  nlohmann::json to_json() const;
};

TheoremSuiteReport theorem_suite(const HomogeneousModel& m, const SamplingPlan& plan = {});

/// Default tolerance for a model: 1e-7 when the fundamental tensor is
/// analytic, 1e-4 when it comes from finite differences.
double default_tol(const HomogeneousModel& m, const SamplingPlan& plan);

}  // namespace cyfin

#endif
