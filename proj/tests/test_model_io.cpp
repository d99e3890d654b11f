// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "cyfin/conditions.hpp"
#include "cyfin/model_io.hpp"

using namespace cyfin;

namespace {

const char* kHeisenbergRiemannian = R"({
  "dim": 3,
  "basis": ["e1", "e2", "e3"],
  "brackets": [{"i": 1, "j": 2, "k": 3, "value": 1.0}],
  "metric": {"kind": "riemannian"}
})";

const char* kSolvableRanders = R"({
  "dim": 3,
  "brackets": [
    {"i": 3, "j": 1, "k": 1, "value": 1.0},
    {"i": 3, "j": 2, "k": 2, "value": 1.0}
  ],
  "metric": {"kind": "randers", "x": [0.0, 0.0, 0.5]},
  "chain_basis_declared": true
})";

const char* kSymmetricPair = R"({
  "dim": 3,
  "brackets": [
    {"i": 1, "j": 2, "k": 3, "value": 1.0},
    {"i": 2, "j": 3, "k": 1, "value": 1.0},
    {"i": 3, "j": 1, "k": 2, "value": 1.0}
  ],
  "h_basis": [[0.0, 0.0, 1.0]],
  "metric": {"kind": "riemannian"}
})";

}  // namespace

TEST_CASE("parse and build a riemannian document") {
  HomogeneousModel m = parse_model(kHeisenbergRiemannian);
  CHECK(m.dim_m() == 3);
  CHECK(m.norm().is_riemannian());
  CHECK(m.algebra().labels()[2] == "e3");
  CHECK((m.algebra().bracket(Vec::Unit(3, 0), Vec::Unit(3, 1)) - Vec::Unit(3, 2)).norm() == 0.0);
  // The parsed model behaves like the built-in one.
  CHECK(check_cyclic(m).verdict == Verdict::fails);
}

TEST_CASE("parse and build a randers document") {
  HomogeneousModel m = parse_model(kSolvableRanders);
  CHECK(m.norm().is_alpha_beta());
  CHECK(m.chain_basis_declared());
  CHECK(check_cyclic(m).verdict == Verdict::holds);
}

TEST_CASE("h_basis yields a nontrivial decomposition") {
  HomogeneousModel m = parse_model(kSymmetricPair);
  CHECK(m.dim_m() == 2);
  CHECK_FALSE(m.trivial_isotropy());
  CHECK(check_symmetric(m.decomposition()).verdict == Verdict::holds);
}

TEST_CASE("alpha_beta documents with explicit alpha and phi") {
  const char* doc = R"({
    "dim": 2,
    "metric": {
      "kind": "alpha_beta",
      "alpha": [[2.0, 0.0], [0.0, 1.0]],
      "x": [0.3, 0.0],
      "phi": {"name": "matsumoto"}
    }
  })";
  HomogeneousModel m = parse_model(doc);
  CHECK(m.norm().alpha_beta_norm().profile.name() == "matsumoto");
  CHECK(m.norm().alpha_beta_norm().alpha.gram()(0, 0) == 2.0);
}

TEST_CASE("round trip preserves the document") {
  ModelDocument doc = parse_document(kSolvableRanders);
  ModelDocument again = parse_document(serialize_document(doc));
  CHECK(doc == again);
  // Serialization is deterministic.
  CHECK(serialize_document(doc) == serialize_document(again));
}

TEST_CASE("parser rejects malformed documents") {
  CHECK_THROWS_AS(parse_document("not json"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"metric": {"kind": "riemannian"}})"), ParseError);  // no dim
  CHECK_THROWS_AS(parse_document(R"({"dim": 0, "metric": {"kind": "riemannian"}})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"dim": 2})"), ParseError);  // no metric
  CHECK_THROWS_AS(parse_document(R"({"dim": 2, "metric": {"kind": "weird"}})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"dim": 2, "metric": {"kind": "randers"}})"),
                  ParseError);  // randers without x
  CHECK_THROWS_AS(
      parse_document(
          R"({"dim": 2, "basis": ["a"], "metric": {"kind": "riemannian"}})"),
      ParseError);  // label count
  CHECK_THROWS_AS(
      parse_document(
          R"({"dim": 2, "brackets": [{"i": 1, "j": 3, "k": 1, "value": 1.0}], "metric": {"kind": "riemannian"}})"),
      ParseError);  // index out of range
  CHECK_THROWS_AS(
      parse_document(
          R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 2, "value": 1.0}], "metric": {"kind": "riemannian"}})"),
      ParseError);  // [e_i, e_i]
  CHECK_THROWS_AS(
      parse_document(
          R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "value": 1.0}, {"i": 2, "j": 1, "k": 3, "value": -1.0}], "metric": {"kind": "riemannian"}})"),
      ParseError);  // mirror duplicate
  CHECK_THROWS_AS(
      parse_document(R"({"dim": 2, "metric": {"kind": "alpha_beta", "x": [1.0, 0.0]}})"),
      ParseError);  // alpha_beta without phi
}

TEST_CASE("build-time validation surfaces the library errors") {
  // Jacobi failure: [e1,e2]=e3 plus [e1,e3]=e1.
  const char* bad_jacobi = R"({
    "dim": 3,
    "brackets": [
      {"i": 1, "j": 2, "k": 3, "value": 1.0},
      {"i": 1, "j": 3, "k": 1, "value": 1.0}
    ],
    "metric": {"kind": "riemannian"}
  })";
  CHECK_THROWS_AS(parse_model(bad_jacobi), JacobiError);

  // alpha of the wrong size for m.
  const char* bad_alpha = R"({
    "dim": 2,
    "metric": {"kind": "riemannian", "alpha": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]}
  })";
  CHECK_THROWS_AS(parse_model(bad_alpha), ParseError);

  // |X| exceeding the randers profile range.
  const char* big_x = R"({
    "dim": 2,
    "metric": {"kind": "randers", "x": [2.0, 0.0]}
  })";
  CHECK_THROWS_AS(parse_model(big_x), InputError);
}
