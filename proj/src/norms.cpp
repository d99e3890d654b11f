// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyfin/norms.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "cyfin/sampling.hpp"

namespace cyfin {

EuclideanForm::EuclideanForm(Mat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() < 1)
    throw InputError("euclidean form: gram matrix must be square and nonempty");
  double scale = gram_.cwiseAbs().maxCoeff();
  if ((gram_ - gram_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + scale))
    throw InputError("euclidean form: gram matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> eig(gram_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() <= 0.0)
    throw InputError("euclidean form: gram matrix is not positive definite");
}

double EuclideanForm::norm(const Vec& y) const { return std::sqrt(inner(y, y)); }

PhiProfile::PhiProfile(Fn phi, Fn phi1, Fn phi2, double b0, std::string name,
                       std::vector<double> params)
    : phi_(std::move(phi)),
      phi1_(std::move(phi1)),
      phi2_(std::move(phi2)),
      b0_(b0),
      name_(std::move(name)),
      params_(std::move(params)) {
  if (!(b0_ > 0.0)) throw InputError("phi profile: b0 must be positive");
  const int grid = 256;
  for (int i = 0; i <= grid; ++i) {
    double r = -b0_ + 2.0 * b0_ * i / grid;
    double p = phi_(r);
    if (!(p > 0.0)) throw InputError("phi profile: phi must be positive on [-b0, b0]");
    double gate = p - r * phi1_(r) + (b0_ * b0_ - r * r) * phi2_(r);
    if (!(gate > 0.0))
      throw ConvexityError("phi profile fails the strong convexity criterion at r = " +
                           std::to_string(r));
  }
  // Supplied derivatives must agree with finite differences of phi itself.
  double h = 1e-5 * b0_;
  for (int i = 1; i < 32; ++i) {
    double r = -0.9 * b0_ + 1.8 * b0_ * i / 32;
    double fd1 = (phi_(r + h) - phi_(r - h)) / (2 * h);
    double fd2 = (phi1_(r + h) - phi1_(r - h)) / (2 * h);
    if (std::abs(fd1 - phi1_(r)) > 1e-6 * (1.0 + std::abs(phi1_(r))) ||
        std::abs(fd2 - phi2_(r)) > 1e-6 * (1.0 + std::abs(phi2_(r))))
      throw InputError("phi profile: supplied derivatives disagree with finite differences");
  }
}

bool PhiProfile::is_trivial() const {
  for (int i = 0; i <= 16; ++i) {
    double r = -0.99 * b0_ + 1.98 * b0_ * i / 16;
    if (std::abs(phi_(r) - 1.0) > 1e-14 || std::abs(phi1_(r)) > 1e-14) return false;
  }
  return true;
}

PhiProfile make_phi_profile(const std::string& name, const std::vector<double>& params) {
  if (name == "riemannian") {
    if (!params.empty()) throw InputError("riemannian profile takes no parameters");
    return PhiProfile([](double) { return 1.0; }, [](double) { return 0.0; },
                      [](double) { return 0.0; }, 1.0, "riemannian");
  }
  if (name == "randers") {
    if (!params.empty()) throw InputError("randers profile takes no parameters");
    double b0 = 1.0 - 1e-12;
    return PhiProfile([](double r) { return 1.0 + r; }, [](double) { return 1.0; },
                      [](double) { return 0.0; }, b0, "randers");
  }
  if (name == "quadratic") {
    if (params.size() != 2) throw InputError("quadratic profile needs parameters (c1, c2)");
    double c1 = params[0], c2 = params[1];
    if (!(c2 > 0.0) || c1 < 0.0)
      throw InputError("quadratic profile needs c1 >= 0 and c2 > 0");
    auto phi = [c1, c2](double r) { return std::sqrt(c1 * r * r + c2); };
    auto phi1 = [c1, c2](double r) { return c1 * r / std::sqrt(c1 * r * r + c2); };
    auto phi2 = [c1, c2](double r) { return c1 * c2 / std::pow(c1 * r * r + c2, 1.5); };
    return PhiProfile(phi, phi1, phi2, 1.0, "quadratic", {c1, c2});
  }
  if (name == "matsumoto") {
    if (!params.empty()) throw InputError("matsumoto profile takes no parameters");
    // Strong convexity of 1/(1-r) requires b0 < 1/2.
    double b0 = 0.49;
    auto phi = [](double r) { return 1.0 / (1.0 - r); };
    auto phi1 = [](double r) { return 1.0 / ((1.0 - r) * (1.0 - r)); };
    auto phi2 = [](double r) { return 2.0 / std::pow(1.0 - r, 3.0); };
    return PhiProfile(phi, phi1, phi2, b0, "matsumoto");
  }
  throw InputError("unknown phi profile: " + name);
}

std::vector<std::pair<std::string, std::vector<std::string>>> phi_profile_registry() {
  return {{"riemannian", {}}, {"randers", {}}, {"quadratic", {"c1", "c2"}}, {"matsumoto", {}}};
}

double phi_Phi(const PhiProfile& p, double r) {
  double f = p.value(r), f1 = p.d1(r), f2 = p.d2(r);
  return f * f1 - r * f1 * f1 - r * f * f2;
}

AlphaBetaNorm::AlphaBetaNorm(EuclideanForm alpha_in, Vec x_in, PhiProfile profile_in)
    : alpha(std::move(alpha_in)), X(std::move(x_in)), profile(std::move(profile_in)) {
  if (X.size() != alpha.dim()) throw InputError("(alpha,beta) norm: X dimension mismatch");
  // Cauchy-Schwarz keeps r = alpha(X,y)/alpha(y) within [-|X|_alpha, |X|_alpha],
  // so |X|_alpha <= b0 keeps every evaluation inside the admissible range.
  if (alpha.norm(X) > profile.b0())
    throw InputError("(alpha,beta) norm: |X|_alpha exceeds the profile range b0");
}

double AlphaBetaNorm::r_of(const Vec& y) const {
  return alpha.inner(X, y) / alpha.norm(y);
}

NormModel NormModel::riemannian(EuclideanForm form) {
  int d = form.dim();
  return NormModel(d, std::move(form));
}

NormModel NormModel::alpha_beta(AlphaBetaNorm norm) {
  int d = norm.alpha.dim();
  return NormModel(d, std::move(norm));
}

NormModel NormModel::custom(int dim, Evaluator f) {
  if (dim < 1) throw InputError("custom norm: dimension must be positive");
  NormModel model(dim, std::move(f));
  // Spot-check positivity and positive 1-homogeneity.
  SampleStream rng(0xc057u);
  const auto& eval = std::get<Evaluator>(model.kind_);
  for (int i = 0; i < 16; ++i) {
    Vec y = rng.unit_vector(dim);
    double f1 = eval(y);
    if (!(f1 > 0.0)) throw InputError("custom norm: F(y) must be positive for y != 0");
    double lambda = 0.5 + 3.0 * rng.next_double();
    if (std::abs(eval(lambda * y) - lambda * f1) > 1e-10 * lambda * f1)
      throw InputError("custom norm: F is not positively 1-homogeneous");
  }
  return model;
}

Mat NormModel::reference_gram() const {
  if (is_riemannian()) return riemannian_form().gram();
  if (is_alpha_beta()) return alpha_beta_norm().alpha.gram();
  return Mat::Identity(dim_, dim_);
}

double NormModel::value(const Vec& y) const {
  if (y.size() != dim_) throw InputError("norm value: dimension mismatch");
  if (y.norm() == 0.0) throw DomainError("norm value: y must be nonzero");
  if (is_riemannian()) return riemannian_form().norm(y);
  if (is_alpha_beta()) {
    const auto& ab = alpha_beta_norm();
    double a = ab.alpha.norm(y);
    return a * ab.profile.value(ab.alpha.inner(ab.X, y) / a);
  }
  return std::get<Evaluator>(kind_)(y);
}

namespace {

Mat require_spd(Mat g) {
  Eigen::LLT<Mat> llt(g);
  if (llt.info() != Eigen::Success)
    throw ConvexityError("fundamental tensor is not positive definite (norm not strongly convex)");
  return g;
}

// Closed form of the (alpha,beta) fundamental tensor:
//   g_y(u,v) = phi^2 a(u,v)
//            - phi phi' a(y,u) a(y,v) a(X,y) / a(y,y)^{3/2}
//            + phi phi' [a(y,v) a(X,u) + a(y,u) a(X,v) - a(u,v) a(X,y)] / a(y,y)^{1/2}
//            + (phi'^2 + phi phi'') p(u) p(v),  p(u) = a(X,u) - a(y,u) a(X,y) / a(y,y)
Mat alpha_beta_fundamental(const AlphaBetaNorm& ab, const Vec& y) {
  const Mat& A = ab.alpha.gram();
  Vec Ay = A * y, AX = A * ab.X;
  double ayy = y.dot(Ay);
  double axy = ab.X.dot(Ay);
  double a1 = std::sqrt(ayy);
  double r = axy / a1;
  double f = ab.profile.value(r), f1 = ab.profile.d1(r), f2 = ab.profile.d2(r);

  Vec p = AX - (axy / ayy) * Ay;
  Mat g = f * f * A;
  g -= (f * f1 * axy / (ayy * a1)) * (Ay * Ay.transpose());
  g += (f * f1 / a1) * (Ay * AX.transpose() + AX * Ay.transpose() - axy * A);
  g += (f1 * f1 + f * f2) * (p * p.transpose());
  return g;
}

}  // namespace

Mat NormModel::fundamental_tensor(const Vec& y) const {
  if (y.size() != dim_) throw InputError("fundamental tensor: dimension mismatch");
  if (y.norm() == 0.0) throw DomainError("fundamental tensor: y must be nonzero");
  if (is_riemannian()) return riemannian_form().gram();
  if (is_alpha_beta()) return require_spd(alpha_beta_fundamental(alpha_beta_norm(), y));

  // Custom norms: central second differences of F^2/2.
  const auto& eval = std::get<Evaluator>(kind_);
  auto half_f2 = [&](const Vec& v) {
    double f = eval(v);
    return 0.5 * f * f;
  };
  double h = 1e-4 * y.norm();
  Mat g(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    Vec ei = h * Vec::Unit(dim_, i);
    for (int j = i; j < dim_; ++j) {
      Vec ej = h * Vec::Unit(dim_, j);
      double v = (half_f2(y + ei + ej) - half_f2(y + ei - ej) - half_f2(y - ei + ej) +
                  half_f2(y - ei - ej)) /
                 (4.0 * h * h);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return require_spd(g);
}

double NormModel::cartan(const Vec& y, const Vec& u, const Vec& v, const Vec& w) const {
  if (y.size() != dim_ || u.size() != dim_ || v.size() != dim_ || w.size() != dim_)
    throw InputError("cartan tensor: dimension mismatch");
  if (y.norm() == 0.0) throw DomainError("cartan tensor: y must be nonzero");
  if (is_riemannian()) return 0.0;
  double wn = w.norm();
  if (wn == 0.0) return 0.0;
  double h = 1e-4 * y.norm() / wn;
  Mat gp = fundamental_tensor(y + h * w);
  Mat gm = fundamental_tensor(y - h * w);
  return u.dot((gp - gm) * v) / (4.0 * h);
}

double invariance_residual(const NormModel& norm, const ReductiveDecomposition& decomp,
                           int samples, std::uint64_t seed) {
  if (norm.dim() != decomp.dim_m())
    throw InputError("invariance residual: norm dimension does not match m");
  if (decomp.trivial_isotropy()) return 0.0;
  SampleStream rng(seed);
  Mat gram = norm.reference_gram();
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Vec y = rng.unit_vector(norm.dim(), gram);
    Mat g = norm.fundamental_tensor(y);
    double f = norm.value(y);
    Vec y_amb = decomp.to_ambient(y);
    for (int i = 0; i < decomp.h().dim(); ++i) {
      Vec br = decomp.project_m(decomp.algebra().bracket(decomp.h().basis().col(i), y_amb));
      worst = std::max(worst, std::abs(br.dot(g * y)) / (f * f));
    }
  }
  return worst;
}

}  // namespace cyfin
