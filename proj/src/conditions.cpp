// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyfin/conditions.hpp"

#include <algorithm>
#include <cmath>

namespace cyfin {

namespace {

using nlohmann::json;

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

double cyclic_sum(const ReductiveDecomposition& d, const Mat& g, const Vec& x, const Vec& y,
                  const Vec& z) {
  return d.bracket_m(x, y).dot(g * z) + d.bracket_m(y, z).dot(g * x) +
         d.bracket_m(z, x).dot(g * y);
}

double cyclic_denom(const Mat& g, const Vec& x, const Vec& y, const Vec& z, double max_c) {
  return (1.0 + g.norm()) * x.norm() * z.norm() * (1.0 + y.norm()) * max_c;
}

Verdict sampled_verdict(double worst, double tol) {
  if (worst <= tol) return Verdict::holds;
  if (worst >= 10.0 * tol) return Verdict::fails;
  return Verdict::inconclusive;
}

// Exact Riemannian decision on all basis triples; the condition is trilinear
// when g_y does not depend on y.
void riemannian_basis_check(const HomogeneousModel& m, const Mat& g, double tol,
                            ConditionReport& report,
                            double (*basis_residual)(const ReductiveDecomposition&, const Mat&,
                                                     const Vec&, const Vec&, const Vec&)) {
  const auto& d = m.decomposition();
  const int n = m.dim_m();
  double max_c = m.algebra().max_structure_constant();
  report.worst_residual = 0.0;
  report.samples_used = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec x = Vec::Unit(n, i), y = Vec::Unit(n, j), z = Vec::Unit(n, k);
        double num = std::abs(basis_residual(d, g, x, y, z));
        double denom = cyclic_denom(g, x, y, z, max_c);
        double res = (denom > 0.0) ? num / denom : 0.0;
        ++report.samples_used;
        if (res > report.worst_residual) {
          report.worst_residual = res;
          report.witness = Witness{y, x, z};
        }
      }
  report.exact = true;
  report.verdict = report.worst_residual <= tol ? Verdict::holds : Verdict::fails;
}

double chain_criterion_residual(const LieAlgebra& L) {
  double worst = 0.0;
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j)
      for (int k = j + 1; k < L.dim(); ++k)
        worst = std::max(worst, std::abs(L.structure_constant(i, k, j) -
                                         L.structure_constant(j, k, i)));
  return worst;
}

// Attaches the structure-constant criterion c_ik^j = c_jk^i when the model
// declares a triangular basis and the reference inner product is the
// standard one in that basis.
void attach_chain_criterion(const HomogeneousModel& m, ConditionReport& report) {
  if (!m.chain_basis_declared() || !m.trivial_isotropy()) return;
  Mat gram = m.norm().reference_gram();
  bool orthonormal = (gram - Mat::Identity(gram.rows(), gram.cols())).norm() <= 1e-12;
  json p;
  p["chain_ok"] = has_ideal_chain(m.algebra());
  p["orthonormal_basis"] = orthonormal;
  if (p["chain_ok"].get<bool>() && orthonormal) {
    double res = chain_criterion_residual(m.algebra());
    p["applicable"] = true;
    p["residual"] = res;
    p["holds"] = res <= 1e-12 * (1.0 + m.algebra().max_structure_constant());
  } else {
    p["applicable"] = false;
  }
  report.extra["chain_criterion"] = p;
}

bool phi_identically_flat(const PhiProfile& p) {
  // Phi == 0 means phi is one of the quadratic profiles and the metric is
  // Riemannian in disguise; checked on a grid.
  for (int i = 0; i <= 64; ++i) {
    double r = -0.99 * p.b0() + 1.98 * p.b0() * i / 64;
    if (std::abs(phi_Phi(p, r)) > 1e-13) return false;
  }
  return true;
}

bool alpha_is_cyclic(const HomogeneousModel& m, double tol) {
  const auto& d = m.decomposition();
  const Mat& g = m.norm().alpha_beta_norm().alpha.gram();
  const int n = m.dim_m();
  double max_c = m.algebra().max_structure_constant();
  if (max_c == 0.0) return true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec x = Vec::Unit(n, i), y = Vec::Unit(n, j), z = Vec::Unit(n, k);
        double res = std::abs(cyclic_sum(d, g, x, y, z)) / cyclic_denom(g, x, y, z, max_c);
        if (res > tol) return false;
      }
  return true;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "inconclusive";
  }
}

json ConditionReport::to_json() const {
  json j;
  j["condition"] = condition;
  j["verdict"] = to_string(verdict);
  j["worst_residual"] = worst_residual;
  j["witness"] = {{"y", vec_to_json(witness.y)},
                  {"x", vec_to_json(witness.x)},
                  {"z", vec_to_json(witness.z)}};
  j["samples"] = samples_used;
  j["seed"] = seed;
  j["tol"] = tol;
  j["exact"] = exact;
  if (!extra.is_null()) j.update(extra);
  return j;
}

double default_tol(const HomogeneousModel& m, const SamplingPlan& plan) {
  if (plan.tol > 0.0) return plan.tol;
  return m.norm().analytic() ? 1e-7 : 1e-4;
}

double cyclic_residual(const HomogeneousModel& m, const Vec& x, const Vec& y, const Vec& z) {
  if (y.size() != m.dim_m() || x.size() != m.dim_m() || z.size() != m.dim_m())
    throw InputError("cyclic residual: dimension mismatch");
  if (y.norm() == 0.0) throw DomainError("cyclic residual: y must be nonzero");
  double max_c = m.algebra().max_structure_constant();
  if (max_c == 0.0 || x.norm() == 0.0 || z.norm() == 0.0) return 0.0;
  Mat g = m.norm().fundamental_tensor(y);
  return std::abs(cyclic_sum(m.decomposition(), g, x, y, z)) / cyclic_denom(g, x, y, z, max_c);
}

ConditionReport check_cyclic(const HomogeneousModel& m, const SamplingPlan& plan) {
  plan.validate();
  const int n = m.dim_m();
  ConditionReport report;
  report.condition = "cyclic";
  report.seed = plan.seed;
  report.tol = default_tol(m, plan);
  report.witness = Witness{Vec::Zero(n), Vec::Zero(n), Vec::Zero(n)};
  attach_chain_criterion(m, report);

  if (m.algebra().max_structure_constant() == 0.0) {
    report.verdict = Verdict::holds;
    report.exact = true;
    report.samples_used = 0;
    return report;
  }

  if (m.norm().is_riemannian()) {
    riemannian_basis_check(
        m, m.norm().riemannian_form().gram(), report.tol, report,
        [](const ReductiveDecomposition& d, const Mat& g, const Vec& x, const Vec& y,
           const Vec& z) { return cyclic_sum(d, g, x, y, z); });
    return report;
  }

  // Sampled sup over base directions and pairs.
  SampleStream rng(plan.seed);
  Mat gram = m.norm().reference_gram();
  const auto& d = m.decomposition();
  double worst = -1.0;
  double max_c = m.algebra().max_structure_constant();
  for (int s = 0; s < plan.n_base; ++s) {
    Vec y = rng.unit_vector(n, gram);
    Mat g = m.norm().fundamental_tensor(y);
    for (int p = 0; p < plan.n_pairs; ++p) {
      Vec x = rng.unit_vector(n);
      Vec z = rng.unit_vector(n);
      double res = std::abs(cyclic_sum(d, g, x, y, z)) / cyclic_denom(g, x, y, z, max_c);
      if (res > worst) {
        worst = res;
        report.witness = Witness{y, x, z};
      }
    }
  }
  report.worst_residual = std::max(worst, 0.0);
  report.samples_used = static_cast<long>(plan.n_base) * plan.n_pairs;
  report.verdict = sampled_verdict(report.worst_residual, report.tol);

  // Exact polynomial reduction for (alpha,beta) Douglas metrics: cyclicity is
  // equivalent to the vanishing of the polynomial Psi.
  if (m.norm().is_alpha_beta()) {
    const auto& ab = m.norm().alpha_beta_norm();
    if (ab.X.norm() > 0.0 && !phi_identically_flat(ab.profile) &&
        check_douglas_ab(m).verdict == Verdict::holds && alpha_is_cyclic(m, report.tol)) {
      double psi_res = psi_polarization_residual(ab, m.decomposition());
      report.extra["psi_polarization_residual"] = psi_res;
      report.exact = true;
      report.verdict = psi_res <= 1e-10 ? Verdict::holds : Verdict::fails;
    }
  }
  return report;
}

ConditionReport check_naturally_reductive(const HomogeneousModel& m, const SamplingPlan& plan) {
  plan.validate();
  const int n = m.dim_m();
  ConditionReport report;
  report.condition = "naturally_reductive";
  report.seed = plan.seed;
  report.tol = default_tol(m, plan);
  report.witness = Witness{Vec::Zero(n), Vec::Zero(n), Vec::Zero(n)};

  if (m.algebra().max_structure_constant() == 0.0) {
    report.verdict = Verdict::holds;
    report.exact = true;
    return report;
  }

  if (m.norm().is_riemannian()) {
    // Cartan tensor vanishes, leaving a trilinear condition.
    riemannian_basis_check(
        m, m.norm().riemannian_form().gram(), report.tol, report,
        [](const ReductiveDecomposition& d, const Mat& g, const Vec& x, const Vec& u,
           const Vec& v) { return d.bracket_m(x, u).dot(g * v) + d.bracket_m(x, v).dot(g * u); });
    return report;
  }

  SampleStream rng(plan.seed);
  Mat gram = m.norm().reference_gram();
  const auto& d = m.decomposition();
  double worst = -1.0;
  double max_c = m.algebra().max_structure_constant();
  Vec witness_v = Vec::Zero(n);
  for (int s = 0; s < plan.n_base; ++s) {
    Vec y = rng.unit_vector(n, gram);
    Mat g = m.norm().fundamental_tensor(y);
    for (int p = 0; p < plan.n_pairs; ++p) {
      Vec x = rng.unit_vector(n);
      Vec u = rng.unit_vector(n);
      Vec v = rng.unit_vector(n);
      double num = std::abs(d.bracket_m(x, u).dot(g * v) + d.bracket_m(x, v).dot(g * u) +
                            2.0 * m.norm().cartan(y, u, v, d.bracket_m(x, y)));
      double denom = (1.0 + g.norm()) * x.norm() * u.norm() * v.norm() * (1.0 + y.norm()) * max_c;
      double res = num / denom;
      if (res > worst) {
        worst = res;
        report.witness = Witness{y, x, u};
        witness_v = v;
      }
    }
  }
  report.worst_residual = std::max(worst, 0.0);
  report.samples_used = static_cast<long>(plan.n_base) * plan.n_pairs;
  report.verdict = sampled_verdict(report.worst_residual, report.tol);
  report.extra["witness_v"] = vec_to_json(witness_v);
  return report;
}

ConditionReport check_douglas_ab(const HomogeneousModel& m) {
  if (!m.norm().is_alpha_beta())
    throw UnsupportedError("the Douglas criterion requires an (alpha,beta) norm");
  const auto& ab = m.norm().alpha_beta_norm();
  if (ab.X.norm() == 0.0) throw UnsupportedError("the Douglas criterion requires X != 0");
  const auto& d = m.decomposition();
  const int n = m.dim_m();
  double max_c = m.algebra().max_structure_constant();

  ConditionReport report;
  report.condition = "douglas";
  report.tol = 1e-10;
  report.exact = true;
  report.witness = Witness{Vec::Zero(n), Vec::Zero(n), Vec::Zero(n)};
  double scale = (1.0 + ab.alpha.gram().norm()) * ab.X.norm() * std::max(max_c, 1e-300);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec br = d.bracket_m(Vec::Unit(n, i), Vec::Unit(n, j));
      double res = std::abs(ab.alpha.inner(br, ab.X)) / scale;
      ++report.samples_used;
      if (res > report.worst_residual) {
        report.worst_residual = res;
        report.witness = Witness{Vec::Unit(n, j), Vec::Unit(n, i), ab.X};
      }
    }
  report.verdict = report.worst_residual <= report.tol ? Verdict::holds : Verdict::fails;
  return report;
}

ConditionReport check_symmetric(const ReductiveDecomposition& d, double tol) {
  const int k = d.dim_m();
  ConditionReport report;
  report.condition = "symmetric";
  report.tol = tol;
  report.exact = true;
  report.witness = Witness{Vec::Zero(k), Vec::Zero(k), Vec::Zero(k)};
  double max_c = d.algebra().max_structure_constant();
  double scale = 1.0 + max_c;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      double res = d.bracket_m(Vec::Unit(k, i), Vec::Unit(k, j)).norm() / scale;
      ++report.samples_used;
      if (res > report.worst_residual) {
        report.worst_residual = res;
        report.witness = Witness{Vec::Unit(k, j), Vec::Unit(k, i), Vec::Zero(k)};
      }
    }
  report.verdict = report.worst_residual <= tol ? Verdict::holds : Verdict::fails;
  return report;
}

double psi_value(const AlphaBetaNorm& norm, const ReductiveDecomposition& d, const Vec& u,
                 const Vec& v, const Vec& y) {
  const auto& a = norm.alpha;
  double ayy = a.inner(y, y);
  double axy = a.inner(norm.X, y);
  return a.inner(y, d.bracket_m(y, u)) * (ayy * a.inner(norm.X, v) - a.inner(y, v) * axy) +
         a.inner(y, d.bracket_m(v, y)) * (ayy * a.inner(norm.X, u) - a.inner(y, u) * axy);
}

double psi_polarization_residual(const AlphaBetaNorm& norm, const ReductiveDecomposition& d) {
  const int n = d.dim_m();
  const Mat& A = norm.alpha.gram();
  Vec AX = A * norm.X;

  // Psi(e_a, e_b, y) = q_a(y) B_b(y) - q_b(y) B_a(y) with
  //   q_a(y) = alpha(y, [y, e_a]_m)   (symmetric matrix M_a),
  //   B_b(y) = alpha(y,y) alpha(X,e_b) - alpha(y,e_b) alpha(X,y)  (matrix N_b).
  std::vector<Mat> M(n), N(n);
  for (int a = 0; a < n; ++a) {
    Mat ad_a = d.ad_m_basis(a);  // v -> [e_a, v]_m, so [y, e_a]_m = -ad_a y
    M[a] = -0.5 * (A * ad_a + ad_a.transpose() * A);
    N[a] = AX[a] * A - 0.5 * (A.col(a) * AX.transpose() + AX * A.col(a).transpose());
  }

  auto pair_sum = [](const Mat& P, const Mat& Q, int p, int q, int r, int s) {
    return P(p, q) * Q(r, s) + P(p, r) * Q(q, s) + P(p, s) * Q(q, r) + Q(p, q) * P(r, s) +
           Q(p, r) * P(q, s) + Q(p, s) * P(q, r);
  };

  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q)
          for (int r = q; r < n; ++r)
            for (int s = r; s < n; ++s)
              worst = std::max(worst, std::abs(pair_sum(M[a], N[b], p, q, r, s) -
                                               pair_sum(M[b], N[a], p, q, r, s)));
  double scale = (1.0 + A.norm()) * (1.0 + A.norm()) * (1.0 + AX.norm()) *
                 (1.0 + d.algebra().max_structure_constant());
  return worst / scale;
}

bool TheoremSuiteReport::consistent() const {
  for (const auto& s : subchecks)
    if (s.status == SubcheckResult::Status::fail) return false;
  return true;
}

json TheoremSuiteReport::to_json() const {
  json j;
  j["cyclic"] = cyclic.to_json();
  j["naturally_reductive"] = naturally_reductive.to_json();
  j["symmetric"] = symmetric.to_json();
  if (douglas) j["douglas"] = douglas->to_json();
  j["subchecks"] = json::array();
  for (const auto& s : subchecks) {
    const char* status = s.status == SubcheckResult::Status::pass    ? "pass"
                         : s.status == SubcheckResult::Status::fail ? "fail"
                                                                    : "skipped";
    j["subchecks"].push_back(
        {{"name", s.name}, {"status", status}, {"residual", s.residual}, {"detail", s.detail}});
  }
  j["consistent"] = consistent();
  return j;
}

namespace {

// Lemma-style assertions at one gated direction y (m == g, trivial isotropy):
// eta(y) = 0, N(y,.) = -ad(y), R_y = -ad(y)^2, ad(y) self-adjoint w.r.t. g_y.
bool lemma_assertions(const HomogeneousModel& m, const Vec& y, double tol, double& worst) {
  const auto& d = m.decomposition();
  const int n = m.dim_m();
  Mat ad_y(n, n);
  for (int i = 0; i < n; ++i) ad_y.col(i) = d.bracket_m(y, Vec::Unit(n, i));

  double res = spray_eta(m, y).norm();
  Mat n_op(n, n);
  for (int i = 0; i < n; ++i) n_op.col(i) = connection_N(m, y, Vec::Unit(n, i));
  res = std::max(res, (n_op + ad_y).cwiseAbs().maxCoeff());
  CurvatureOperator r = riemann_operator(m, y);
  res = std::max(res, (r.matrix + ad_y * ad_y).cwiseAbs().maxCoeff());
  Mat g = m.norm().fundamental_tensor(y);
  Mat sa = g * ad_y;
  res = std::max(res, (sa - sa.transpose()).cwiseAbs().maxCoeff());
  worst = std::max(worst, res);
  return res <= tol;
}

}  // namespace

TheoremSuiteReport theorem_suite(const HomogeneousModel& m, const SamplingPlan& plan) {
  plan.validate();
  TheoremSuiteReport report;
  report.cyclic = check_cyclic(m, plan);
  report.naturally_reductive = check_naturally_reductive(m, plan);
  report.symmetric = check_symmetric(m.decomposition());
  bool has_douglas = m.norm().is_alpha_beta() && m.norm().alpha_beta_norm().X.norm() > 0.0;
  if (has_douglas) report.douglas = check_douglas_ab(m);

  double tol = default_tol(m, plan);
  const int n = m.dim_m();

  // (a) cyclic + naturally reductive => symmetric.
  {
    SubcheckResult s;
    s.name = "cyclic_and_natred_imply_symmetric";
    if (report.cyclic.verdict == Verdict::holds &&
        report.naturally_reductive.verdict == Verdict::holds) {
      s.status = report.symmetric.verdict == Verdict::holds ? SubcheckResult::Status::pass
                                                            : SubcheckResult::Status::fail;
      s.residual = report.symmetric.worst_residual;
      s.detail = "both conditions hold; decomposition must be a Cartan decomposition";
    } else {
      s.detail = "premise not met (one of the conditions does not hold)";
    }
    report.subchecks.push_back(s);
  }

  // (b) directions with <[g,g], y>_y = 0: spray vanishes, N(y,.) = -ad(y),
  //     R_y = -ad(y)^2, ad(y) self-adjoint.  Central directions satisfy the
  //     conclusions whenever the gate holds; generic gated directions need
  //     the cyclic hypothesis.
  {
    SubcheckResult s;
    s.name = "gated_directions_lemma";
    if (m.trivial_isotropy() && m.algebra().max_structure_constant() > 0.0) {
      Subspace derived = classify(m.algebra()).derived;
      Subspace c = center(m.algebra());
      auto gate = [&](const Vec& y) {
        Mat g = m.norm().fundamental_tensor(y);
        double worst = 0.0;
        for (int i = 0; i < derived.dim(); ++i)
          worst = std::max(worst, std::abs(derived.basis().col(i).dot(g * y)));
        return worst / (1.0 + g.norm());
      };
      std::vector<Vec> candidates;
      for (int i = 0; i < c.dim(); ++i) candidates.push_back(c.basis().col(i));
      if (report.cyclic.verdict == Verdict::holds) {
        SampleStream rng(plan.seed, 0xb);
        Mat gram = m.norm().reference_gram();
        for (int i = 0; i < std::min(plan.n_base, 64); ++i)
          candidates.push_back(rng.unit_vector(n, gram));
      }
      int gated = 0;
      bool ok = true;
      double worst = 0.0;
      double lemma_tol = m.norm().analytic() ? 1e-6 : 1e-3;
      for (const Vec& y : candidates) {
        if (gate(y) > tol) continue;
        ++gated;
        ok = lemma_assertions(m, y, lemma_tol, worst) && ok;
      }
      if (gated == 0) {
        s.detail = "no direction satisfied the gate <[g,g], y>_y = 0";
      } else {
        s.status = ok ? SubcheckResult::Status::pass : SubcheckResult::Status::fail;
        s.residual = worst;
        s.detail = std::to_string(gated) + " gated direction(s) checked";
      }
    } else {
      s.detail = "needs trivial isotropy and a non-abelian bracket";
    }
    report.subchecks.push_back(s);
  }

  // (c) (alpha,beta) Douglas models: cyclic verdict must match Psi == 0.
  {
    SubcheckResult s;
    s.name = "douglas_cyclic_psi_equivalence";
    if (has_douglas && report.douglas->verdict == Verdict::holds &&
        report.cyclic.verdict != Verdict::inconclusive) {
      double psi_res = psi_polarization_residual(m.norm().alpha_beta_norm(), m.decomposition());
      bool psi_zero = psi_res <= 1e-10;
      bool cyclic_holds = report.cyclic.verdict == Verdict::holds;
      s.status = (psi_zero == cyclic_holds) ? SubcheckResult::Status::pass
                                            : SubcheckResult::Status::fail;
      s.residual = psi_res;
      s.detail = psi_zero ? "Psi vanishes identically" : "Psi is a nonzero polynomial";
    } else {
      s.detail = "not an (alpha,beta) Douglas model with a decided cyclic verdict";
    }
    report.subchecks.push_back(s);
  }

  // (d) cyclic non-abelian Lie groups are never flat.
  {
    SubcheckResult s;
    s.name = "cyclic_nonabelian_not_flat";
    if (report.cyclic.verdict == Verdict::holds && m.trivial_isotropy() &&
        m.algebra().max_structure_constant() > 0.0 && !classify(m.algebra()).abelian) {
      SampleStream rng(plan.seed, 0xd);
      Mat gram = m.norm().reference_gram();
      double max_k = 0.0;
      for (int i = 0; i < std::min(plan.n_base, 32); ++i) {
        Vec y = rng.unit_vector(n, gram);
        Vec u = rng.unit_vector(n);
        try {
          max_k = std::max(max_k, std::abs(flag_curvature(m, y, u)));
        } catch (const DegenerateFlagError&) {
          continue;
        }
      }
      s.residual = max_k;
      s.status = max_k > tol ? SubcheckResult::Status::pass : SubcheckResult::Status::fail;
      s.detail = "largest sampled |flag curvature|";
    } else {
      s.detail = "needs a cyclic non-abelian Lie group with trivial isotropy";
    }
    report.subchecks.push_back(s);
  }

  return report;
}

}  // namespace cyfin
