// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyfin/constructions.hpp"

#include <cmath>
#include <sstream>

namespace cyfin {

namespace {

std::vector<Mat> zero_constants(int n) { return std::vector<Mat>(n, Mat::Zero(n, n)); }

void set_bracket(std::vector<Mat>& c, int i, int j, int k, double value) {
  c[k](i, j) = value;
  c[k](j, i) = -value;
}

HomogeneousModel randers_on(LieAlgebra algebra, Vec x, bool chain_declared) {
  auto decomp = ReductiveDecomposition::trivial(std::move(algebra));
  int n = decomp.dim_m();
  AlphaBetaNorm norm(EuclideanForm::identity(n), std::move(x), make_phi_profile("randers"));
  return HomogeneousModel(decomp, NormModel::alpha_beta(std::move(norm)), chain_declared);
}

}  // namespace

LieAlgebra solvable_algebra(int n, double a) {
  if (n < 2) throw InputError("solvable model: n must be >= 2");
  if (!(a > 0.0)) throw InputError("solvable model: a must be positive");
  auto c = zero_constants(n);
  for (int i = 0; i < n - 1; ++i) set_bracket(c, n - 1, i, i, a);
  return LieAlgebra(n, std::move(c));
}

LieAlgebra heisenberg3_algebra() {
  auto c = zero_constants(3);
  set_bracket(c, 0, 1, 2, 1.0);  // [e1, e2] = e3
  return LieAlgebra(3, std::move(c));
}

LieAlgebra so3_algebra() {
  auto c = zero_constants(3);
  set_bracket(c, 0, 1, 2, 1.0);  // [e1, e2] = e3
  set_bracket(c, 1, 2, 0, 1.0);  // [e2, e3] = e1
  set_bracket(c, 2, 0, 1, 1.0);  // [e3, e1] = e2
  return LieAlgebra(3, std::move(c));
}

HomogeneousModel solvable_cyclic_model(int n, double a, double c) {
  if (!(std::abs(c) > 0.0 && std::abs(c) < 1.0))
    throw InputError("solvable model: c must lie in (-1, 1) \\ {0}");
  return randers_on(solvable_algebra(n, a), c * Vec::Unit(n, n - 1), true);
}

std::vector<ExampleInfo> list_examples() {
  return {
      {"abelian", {"n"}, "abelian algebra of dimension n, Euclidean norm"},
      {"heisenberg3", {}, "3-dimensional Heisenberg algebra, Euclidean norm"},
      {"so3_bi_invariant", {}, "so(3) with the bi-invariant inner product, trivial isotropy"},
      {"so3_symmetric_pair", {}, "so(3) with h = span{e3}, m = span{e1,e2}, round metric"},
      {"solvable_cyclic", {"n", "a", "c"},
       "solvable algebra [e_n,e_i] = a e_i with the Randers norm F = alpha + beta, X = c e_n"},
      {"solvable_plus_center", {"n", "a", "c"},
       "solvable_cyclic plus a 1-dimensional center, block-diagonal alpha"},
  };
}

HomogeneousModel example(const std::string& name, const std::vector<double>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw InputError("example '" + name + "' expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "abelian") {
    need(1);
    int n = static_cast<int>(params[0]);
    if (n < 1 || params[0] != n) throw InputError("abelian(n): n must be a positive integer");
    auto decomp = ReductiveDecomposition::trivial(LieAlgebra::abelian(n));
    return HomogeneousModel(decomp, NormModel::riemannian(EuclideanForm::identity(n)));
  }
  if (name == "heisenberg3") {
    need(0);
    auto decomp = ReductiveDecomposition::trivial(heisenberg3_algebra());
    return HomogeneousModel(decomp, NormModel::riemannian(EuclideanForm::identity(3)));
  }
  if (name == "so3_bi_invariant") {
    need(0);
    auto decomp = ReductiveDecomposition::trivial(so3_algebra());
    return HomogeneousModel(decomp, NormModel::riemannian(EuclideanForm::identity(3)));
  }
  if (name == "so3_symmetric_pair") {
    need(0);
    Mat h(3, 1), mm(3, 2);
    h << 0, 0, 1;
    mm << 1, 0, 0, 1, 0, 0;
    ReductiveDecomposition decomp(so3_algebra(), Subspace::span(h), Subspace::span(mm));
    return HomogeneousModel(decomp, NormModel::riemannian(EuclideanForm::identity(2)));
  }
  if (name == "solvable_cyclic") {
    need(3);
    int n = static_cast<int>(params[0]);
    if (params[0] != n) throw InputError("solvable_cyclic: n must be an integer");
    return solvable_cyclic_model(n, params[1], params[2]);
  }
  if (name == "solvable_plus_center") {
    need(3);
    int n = static_cast<int>(params[0]);
    if (params[0] != n || n < 2) throw InputError("solvable_plus_center: n must be an integer >= 2");
    double a = params[1], c = params[2];
    if (!(a > 0.0)) throw InputError("solvable_plus_center: a must be positive");
    if (!(std::abs(c) > 0.0 && std::abs(c) < 1.0))
      throw InputError("solvable_plus_center: c must lie in (-1, 1) \\ {0}");
    LieAlgebra sum = direct_sum(solvable_algebra(n, a), LieAlgebra::abelian(1));
    return randers_on(std::move(sum), c * Vec::Unit(n + 1, n - 1), false);
  }
  throw InputError("unknown example: " + name);
}

HomogeneousModel example_from_string(const std::string& spec) {
  auto open = spec.find('(');
  if (open == std::string::npos) return example(spec);
  if (spec.back() != ')') throw InputError("malformed example spec: " + spec);
  std::string name = spec.substr(0, open);
  std::string args = spec.substr(open + 1, spec.size() - open - 2);
  std::vector<double> params;
  std::stringstream ss(args);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      params.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw InputError("malformed example parameter: " + token);
    }
  }
  return example(name, params);
}

}  // namespace cyfin
