// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYFIN_NORMS_HPP
#define CYFIN_NORMS_HPP

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cyfin/lie_algebra.hpp"

namespace cyfin {

/// Symmetric positive-definite inner product alpha(.,.).
class EuclideanForm {
 public:
  explicit EuclideanForm(Mat gram);
  static EuclideanForm identity(int dim) { return EuclideanForm(Mat::Identity(dim, dim)); }

  int dim() const { return static_cast<int>(gram_.rows()); }
  const Mat& gram() const { return gram_; }
  double inner(const Vec& u, const Vec& v) const { return u.dot(gram_ * v); }
  double norm(const Vec& y) const;

 private:
  Mat gram_;
};

/// Smooth profile phi with user-supplied first and second derivatives,
/// admissible on |r| <= b0.  Construction checks positivity, the strong
/// convexity gate phi - r phi' + (b0^2 - r^2) phi'' > 0 on a 256-point grid,
/// and finite-difference consistency of the supplied derivatives.
class PhiProfile {
 public:
  using Fn = std::function<double(double)>;

  PhiProfile(Fn phi, Fn phi1, Fn phi2, double b0, std::string name = "custom",
             std::vector<double> params = {});

  double b0() const { return b0_; }
  const std::string& name() const { return name_; }
  const std::vector<double>& params() const { return params_; }

  double value(double r) const { check_domain(r); return phi_(r); }
  double d1(double r) const { check_domain(r); return phi1_(r); }
  double d2(double r) const { check_domain(r); return phi2_(r); }

  /// True when phi is the constant 1 (the Riemannian profile).
  bool is_trivial() const;

 private:
  void check_domain(double r) const {
    if (std::abs(r) > b0_ * (1.0 + 1e-12))
      throw DomainError("phi profile evaluated outside |r| <= b0");
  }

  Fn phi_, phi1_, phi2_;
  double b0_;
  std::string name_;
  std::vector<double> params_;
};

/// Registered presets: "riemannian", "randers", "quadratic" (c1, c2),
/// "matsumoto".
PhiProfile make_phi_profile(const std::string& name, const std::vector<double>& params = {});

/// Names and parameter schemas of the registered profiles.
std::vector<std::pair<std::string, std::vector<std::string>>> phi_profile_registry();

/// Phi(r) = phi phi' - r phi'^2 - r phi phi''.  Vanishes identically exactly
/// for the quadratic (Riemannian-equivalent) profiles.
double phi_Phi(const PhiProfile& p, double r);

/// (alpha, beta) norm data: F(y) = alpha(y) * phi(alpha(X, y) / alpha(y)).
struct AlphaBetaNorm {
  EuclideanForm alpha;
  Vec X;
  PhiProfile profile;

  AlphaBetaNorm(EuclideanForm alpha_in, Vec x_in, PhiProfile profile_in);
  double r_of(const Vec& y) const;
};

/// Minkowski norm on m: Riemannian, (alpha,beta), or a custom evaluator
/// (differentiated numerically).
class NormModel {
 public:
  using Evaluator = std::function<double(const Vec&)>;

  static NormModel riemannian(EuclideanForm form);
  static NormModel alpha_beta(AlphaBetaNorm norm);
  static NormModel custom(int dim, Evaluator f);

  int dim() const { return dim_; }
  bool is_riemannian() const { return std::holds_alternative<EuclideanForm>(kind_); }
  bool is_alpha_beta() const { return std::holds_alternative<AlphaBetaNorm>(kind_); }
  bool is_custom() const { return std::holds_alternative<Evaluator>(kind_); }

  /// True when the fundamental tensor comes from a closed form rather than
  /// finite differences; drives the default check tolerances.
  bool analytic() const { return !is_custom(); }

  const EuclideanForm& riemannian_form() const { return std::get<EuclideanForm>(kind_); }
  const AlphaBetaNorm& alpha_beta_norm() const { return std::get<AlphaBetaNorm>(kind_); }

  /// Gram matrix of the reference inner product (alpha for (alpha,beta),
  /// identity for custom norms); used for unit-sphere sampling.
  Mat reference_gram() const;

  double value(const Vec& y) const;

  /// g_y as a symmetric positive-definite matrix; throws ConvexityError when
  /// positive definiteness is lost.
  Mat fundamental_tensor(const Vec& y) const;

  /// C_y(u, v, w), central difference of the fundamental tensor along w.
  double cartan(const Vec& y, const Vec& u, const Vec& v, const Vec& w) const;

 private:
  NormModel(int dim, std::variant<EuclideanForm, AlphaBetaNorm, Evaluator> kind)
      : dim_(dim), kind_(std::move(kind)) {}

  int dim_;
  std::variant<EuclideanForm, AlphaBetaNorm, Evaluator> kind_;
};

/// max over sampled y in m and basis h of |<[h,y]_m, y>_y| / F(y)^2; zero iff
/// the norm is invariant under the connected isotropy group.
double invariance_residual(const NormModel& norm, const ReductiveDecomposition& decomp,
                           int samples = 64, std::uint64_t seed = 0x1e5eed);

}  // namespace cyfin

#endif
