// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYFIN_CONSTRUCTIONS_HPP
#define CYFIN_CONSTRUCTIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "cyfin/homgeo.hpp"

namespace cyfin {

struct ExampleInfo {
  std::string name;
  std::vector<std::string> param_names;
  std::string description;
};

std::vector<ExampleInfo> list_examples();

/// Solvable Lie group with [e_n, e_i] = a e_i (1 <= i <= n-1), the standard
/// inner product, and the Randers norm F = alpha + beta with X = c e_n.
/// Requires n >= 2, a > 0, 0 < |c| < 1.
HomogeneousModel solvable_cyclic_model(int n, double a, double c);

/// Registry lookup; parameters are positional in the order reported by
/// list_examples().
HomogeneousModel example(const std::string& name, const std::vector<double>& params = {});

/// Parses "name" or "name(p1,p2,...)".
HomogeneousModel example_from_string(const std::string& spec);

/// The bare solvable Lie algebra of solvable_cyclic_model.
LieAlgebra solvable_algebra(int n, double a);

LieAlgebra heisenberg3_algebra();
LieAlgebra so3_algebra();

}  // namespace cyfin

#endif
