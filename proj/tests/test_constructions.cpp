// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "cyfin/conditions.hpp"
#include "cyfin/constructions.hpp"

using namespace cyfin;

TEST_CASE("solvable algebra shape") {
  LieAlgebra L = solvable_algebra(4, 1.5);
  for (int i = 0; i < 3; ++i)
    CHECK((L.bracket(Vec::Unit(4, 3), Vec::Unit(4, i)) - 1.5 * Vec::Unit(4, i)).norm() <= 1e-15);
  CHECK(L.bracket(Vec::Unit(4, 0), Vec::Unit(4, 1)).norm() == 0.0);
  CHECK(has_ideal_chain(L));
  CHECK_THROWS_AS(solvable_algebra(1, 1.0), InputError);
  CHECK_THROWS_AS(solvable_algebra(3, -1.0), InputError);
}

TEST_CASE("solvable cyclic model parameters") {
  HomogeneousModel m = solvable_cyclic_model(3, 1.0, 0.5);
  CHECK(m.dim_m() == 3);
  CHECK(m.trivial_isotropy());
  CHECK(m.chain_basis_declared());
  CHECK(m.norm().is_alpha_beta());
  CHECK((m.norm().alpha_beta_norm().X - 0.5 * Vec::Unit(3, 2)).norm() == 0.0);

  CHECK_THROWS_AS(solvable_cyclic_model(3, 1.0, 0.0), InputError);
  CHECK_THROWS_AS(solvable_cyclic_model(3, 1.0, 1.0), InputError);
  CHECK_THROWS_AS(solvable_cyclic_model(3, 1.0, -1.2), InputError);
}

TEST_CASE("solvable cyclic family is cyclic for a parameter sweep") {
  for (int n : {2, 3, 5})
    for (double a : {0.5, 2.0})
      for (double c : {-0.7, 0.3}) {
        ConditionReport r = check_cyclic(solvable_cyclic_model(n, a, c));
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.exact);
      }
}

TEST_CASE("example registry") {
  CHECK(example("abelian", {3}).dim_m() == 3);
  CHECK(example("heisenberg3").algebra().dim() == 3);
  CHECK(example("so3_bi_invariant").trivial_isotropy());

  HomogeneousModel pair = example("so3_symmetric_pair");
  CHECK(pair.dim_m() == 2);
  CHECK_FALSE(pair.trivial_isotropy());

  HomogeneousModel spc = example("solvable_plus_center", {3, 1.0, 0.5});
  CHECK(spc.dim_m() == 4);
  CHECK(center(spc.algebra()).dim() == 1);
  CHECK_FALSE(spc.chain_basis_declared());

  CHECK_THROWS_AS(example("nope"), InputError);
  CHECK_THROWS_AS(example("abelian"), InputError);           // missing parameter
  CHECK_THROWS_AS(example("abelian", {2.5}), InputError);    // non-integer
  CHECK_THROWS_AS(example("heisenberg3", {1.0}), InputError);
}

TEST_CASE("example spec strings") {
  CHECK(example_from_string("heisenberg3").algebra().dim() == 3);
  CHECK(example_from_string("solvable_cyclic(3,1,0.5)").dim_m() == 3);
  CHECK(example_from_string("abelian(4)").dim_m() == 4);
  CHECK_THROWS_AS(example_from_string("abelian(4"), InputError);
  CHECK_THROWS_AS(example_from_string("abelian(x)"), InputError);
}

TEST_CASE("list_examples covers the registry") {
  auto infos = list_examples();
  CHECK(infos.size() == 6);
  for (const auto& info : infos) {
    std::vector<double> params;
    // Pick valid defaults matching each schema.
    if (info.name == "abelian") params = {3};
    if (info.name == "solvable_cyclic" || info.name == "solvable_plus_center")
      params = {3, 1.0, 0.5};
    CHECK_NOTHROW(example(info.name, params));
  }
}
