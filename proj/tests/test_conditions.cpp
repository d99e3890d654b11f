// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "cyfin/conditions.hpp"
#include "cyfin/constructions.hpp"

using namespace cyfin;

namespace {

HomogeneousModel left_invariant(const LieAlgebra& L) {
  return HomogeneousModel(ReductiveDecomposition::trivial(L),
                          NormModel::riemannian(EuclideanForm::identity(L.dim())));
}

HomogeneousModel h3_randers(const Vec& x) {
  return HomogeneousModel(
      ReductiveDecomposition::trivial(heisenberg3_algebra()),
      NormModel::alpha_beta(AlphaBetaNorm(EuclideanForm::identity(3), x,
                                          make_phi_profile("randers"))));
}

}  // namespace

TEST_CASE("cyclic check, abelian is exact") {
  ConditionReport r = check_cyclic(left_invariant(LieAlgebra::abelian(4)));
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.exact);
  CHECK(r.worst_residual == 0.0);
}

TEST_CASE("cyclic check, heisenberg riemannian fails with a frozen residual") {
  ConditionReport r = check_cyclic(left_invariant(heisenberg3_algebra()));
  CHECK(r.verdict == Verdict::fails);
  CHECK(r.exact);
  // Worst basis triple (e1, e2, e3): cyclic sum 1, denominator (1 + sqrt(3)) * 2.
  CHECK(r.worst_residual == doctest::Approx(1.0 / ((1.0 + std::sqrt(3.0)) * 2.0)));
  // The stored witness re-evaluates to the same residual.
  HomogeneousModel m = left_invariant(heisenberg3_algebra());
  CHECK(cyclic_residual(m, r.witness.x, r.witness.y, r.witness.z) ==
        doctest::Approx(r.worst_residual));
}

TEST_CASE("cyclic check, bi-invariant so3 fails") {
  ConditionReport r = check_cyclic(left_invariant(so3_algebra()));
  CHECK(r.verdict == Verdict::fails);
  CHECK(r.exact);
}

TEST_CASE("cyclic check, solvable randers model holds via the exact reduction") {
  ConditionReport r = check_cyclic(solvable_cyclic_model(3, 1.0, 0.5));
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.exact);
  REQUIRE(r.extra.contains("psi_polarization_residual"));
  CHECK(r.extra["psi_polarization_residual"].get<double>() <= 1e-12);
  // Triangular-basis criterion is attached and agrees.
  REQUIRE(r.extra.contains("chain_criterion"));
  CHECK(r.extra["chain_criterion"]["applicable"].get<bool>());
  CHECK(r.extra["chain_criterion"]["holds"].get<bool>());
}

TEST_CASE("cyclic check, heisenberg randers with X = e1 fails by sampling") {
  // [g,g] = span{e3} is alpha-orthogonal to X = 0.5 e1, so the Douglas
  // criterion holds, but the exact reduction also needs alpha itself to be
  // cyclic, which fails on the Heisenberg algebra.  Sampling decides.
  HomogeneousModel m = h3_randers(0.5 * Vec::Unit(3, 0));
  ConditionReport r = check_cyclic(m);
  CHECK(r.verdict == Verdict::fails);
  CHECK_FALSE(r.exact);
  CHECK_FALSE(r.extra.contains("psi_polarization_residual"));
  // The polynomial obstruction is still visible directly.
  CHECK(psi_polarization_residual(m.norm().alpha_beta_norm(), m.decomposition()) > 1e-6);
}

TEST_CASE("cyclic check, sampled path for non-Douglas alpha-beta norms") {
  // X = 0.5 e3 pairs nontrivially with [g,g], so Douglas fails and the
  // verdict comes from sampling alone.
  ConditionReport r = check_cyclic(h3_randers(0.5 * Vec::Unit(3, 2)), SamplingPlan{7, 32, 16});
  CHECK(r.verdict == Verdict::fails);
  CHECK_FALSE(r.exact);
  CHECK(r.samples_used == 32 * 16);
  CHECK(r.seed == 7);
}

TEST_CASE("cyclic check respects an explicit tolerance") {
  SamplingPlan loose{42, 16, 8, 1e3};  // absurd tol makes everything hold
  ConditionReport r = check_cyclic(h3_randers(0.5 * Vec::Unit(3, 2)), loose);
  CHECK(r.tol == 1e3);
  CHECK(r.verdict == Verdict::holds);

  SamplingPlan bad{42, 0, 8};
  CHECK_THROWS_AS(check_cyclic(left_invariant(so3_algebra()), bad), InputError);
}

TEST_CASE("naturally reductive check") {
  // Bi-invariant metrics are naturally reductive.
  ConditionReport bi = check_naturally_reductive(left_invariant(so3_algebra()));
  CHECK(bi.verdict == Verdict::holds);
  CHECK(bi.exact);

  // The Heisenberg left-invariant metric is not.
  ConditionReport h3 = check_naturally_reductive(left_invariant(heisenberg3_algebra()));
  CHECK(h3.verdict == Verdict::fails);

  // Symmetric pairs are trivially naturally reductive ([m,m]_m = 0).
  HomogeneousModel pair = example("so3_symmetric_pair");
  ConditionReport sp = check_naturally_reductive(pair);
  CHECK(sp.verdict == Verdict::holds);

  // Sampled path reports the extra witness argument.
  ConditionReport rd =
      check_naturally_reductive(solvable_cyclic_model(3, 1.0, 0.5), SamplingPlan{3, 16, 8});
  CHECK(rd.verdict == Verdict::fails);
  CHECK(rd.extra.contains("witness_v"));
}

TEST_CASE("douglas criterion") {
  CHECK(check_douglas_ab(solvable_cyclic_model(3, 1.0, 0.5)).verdict == Verdict::holds);
  CHECK(check_douglas_ab(h3_randers(0.5 * Vec::Unit(3, 0))).verdict == Verdict::holds);
  ConditionReport r = check_douglas_ab(h3_randers(0.5 * Vec::Unit(3, 2)));
  CHECK(r.verdict == Verdict::fails);
  CHECK(r.exact);
  CHECK(r.worst_residual > 0.0);
  CHECK_THROWS_AS(check_douglas_ab(left_invariant(so3_algebra())), UnsupportedError);
}

TEST_CASE("symmetric pair check") {
  HomogeneousModel pair = example("so3_symmetric_pair");
  CHECK(check_symmetric(pair.decomposition()).verdict == Verdict::holds);
  CHECK(check_symmetric(ReductiveDecomposition::trivial(heisenberg3_algebra())).verdict ==
        Verdict::fails);
  CHECK(check_symmetric(ReductiveDecomposition::trivial(LieAlgebra::abelian(2))).verdict ==
        Verdict::holds);
}

TEST_CASE("psi values on the heisenberg randers model") {
  HomogeneousModel m = h3_randers(0.5 * Vec::Unit(3, 0));
  const AlphaBetaNorm& ab = m.norm().alpha_beta_norm();
  const auto& d = m.decomposition();
  Vec e1 = Vec::Unit(3, 0), e2 = Vec::Unit(3, 1), e3 = Vec::Unit(3, 2);

  // Psi is linear in X; for X = e1 the values below would be 0 and -1, so
  // with X = 0.5 e1 they are 0 and -0.5.  The polynomial is not identically
  // zero even though Psi(e2, e3, e1 + e2) happens to vanish.
  CHECK(psi_value(ab, d, e2, e3, e1 + e2) == doctest::Approx(0.0));
  CHECK(psi_value(ab, d, e2, e3, e1 + e3) == doctest::Approx(-0.5));

  CHECK(psi_polarization_residual(ab, d) > 1e-6);
}

TEST_CASE("psi polarization agrees with pointwise evaluation") {
  // Zero polynomial: solvable model.
  HomogeneousModel solv = solvable_cyclic_model(4, 2.0, 0.3);
  const AlphaBetaNorm& ab = solv.norm().alpha_beta_norm();
  CHECK(psi_polarization_residual(ab, solv.decomposition()) <= 1e-14);
  SampleStream rng(37);
  for (int i = 0; i < 16; ++i) {
    Vec u = rng.gaussian_vector(4), v = rng.gaussian_vector(4), y = rng.gaussian_vector(4);
    CHECK(std::abs(psi_value(ab, solv.decomposition(), u, v, y)) <= 1e-10);
  }
}

TEST_CASE("theorem suite on the solvable randers family") {
  TheoremSuiteReport r = theorem_suite(solvable_cyclic_model(3, 1.0, 0.5), SamplingPlan{42, 64, 16});
  CHECK(r.cyclic.verdict == Verdict::holds);
  CHECK(r.naturally_reductive.verdict == Verdict::fails);
  CHECK(r.symmetric.verdict == Verdict::fails);
  REQUIRE(r.douglas.has_value());
  CHECK(r.douglas->verdict == Verdict::holds);
  CHECK(r.consistent());

  // Branch (c) decided the equivalence, branch (d) found curvature.
  auto find = [&](const std::string& name) -> const SubcheckResult& {
    for (const auto& s : r.subchecks)
      if (s.name == name) return s;
    static SubcheckResult none;
    return none;
  };
  CHECK(find("douglas_cyclic_psi_equivalence").status == SubcheckResult::Status::pass);
  CHECK(find("cyclic_nonabelian_not_flat").status == SubcheckResult::Status::pass);
  CHECK(find("cyclic_and_natred_imply_symmetric").status == SubcheckResult::Status::skipped);
}

TEST_CASE("theorem suite on a center-extended model exercises the gate") {
  HomogeneousModel m = example("solvable_plus_center", {3, 1.0, 0.5});
  TheoremSuiteReport r = theorem_suite(m, SamplingPlan{42, 64, 16});
  CHECK(r.consistent());
  bool found = false;
  for (const auto& s : r.subchecks)
    if (s.name == "gated_directions_lemma") {
      found = true;
      CHECK(s.status == SubcheckResult::Status::pass);  // the central direction
    }
  CHECK(found);
}

TEST_CASE("theorem suite on symmetric data takes branch (a)") {
  TheoremSuiteReport r = theorem_suite(example("so3_symmetric_pair"));
  CHECK(r.cyclic.verdict == Verdict::holds);           // [m,m]_m = 0
  CHECK(r.naturally_reductive.verdict == Verdict::holds);
  CHECK(r.symmetric.verdict == Verdict::holds);
  CHECK(r.consistent());
  for (const auto& s : r.subchecks)
    if (s.name == "cyclic_and_natred_imply_symmetric")
      CHECK(s.status == SubcheckResult::Status::pass);
}

TEST_CASE("report serialization") {
  ConditionReport r = check_cyclic(left_invariant(heisenberg3_algebra()));
  nlohmann::json j = r.to_json();
  CHECK(j["condition"] == "cyclic");
  CHECK(j["verdict"] == "fails");
  CHECK(j["exact"] == true);
  CHECK(j["witness"]["y"].size() == 3);
  CHECK(j.contains("tol"));
  CHECK(to_string(Verdict::inconclusive) == "inconclusive");
}

TEST_CASE("default tolerances track the tensor path") {
  HomogeneousModel analytic = solvable_cyclic_model(3, 1.0, 0.5);
  CHECK(default_tol(analytic, SamplingPlan{}) == 1e-7);
  HomogeneousModel fd(
      ReductiveDecomposition::trivial(LieAlgebra::abelian(2)),
      NormModel::custom(2, [](const Vec& y) { return std::sqrt(y.squaredNorm()); }));
  CHECK(default_tol(fd, SamplingPlan{}) == 1e-4);
  CHECK(default_tol(analytic, SamplingPlan{1, 2, 3, 0.5}) == 0.5);
}
