// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYFIN_MODEL_IO_HPP
#define CYFIN_MODEL_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cyfin/homgeo.hpp"

namespace cyfin {

/// One bracket entry: [e_i, e_j] has coefficient `value` on e_k.
/// Indices are 1-based in documents and converted at the parser boundary.
struct BracketEntry {
  int i = 0, j = 0, k = 0;
  double value = 0.0;
};

struct MetricSpec {
  std::string kind;                    // "riemannian" | "alpha_beta" | "randers"
  std::optional<Mat> alpha;            // defaults to the identity on m
  std::optional<Vec> x;                // required unless riemannian
  std::string phi_name;                // required for alpha_beta
  std::vector<double> phi_params;
};

struct ModelDocument {
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  std::vector<Vec> h_basis;
  MetricSpec metric;
  bool chain_basis_declared = false;

  bool operator==(const ModelDocument& other) const;
};

ModelDocument parse_document(const std::string& text);
std::string serialize_document(const ModelDocument& doc);

/// Builds and validates the model described by a document; all lie_core and
/// norm invariants are enforced, with field-level error messages.
HomogeneousModel build_model(const ModelDocument& doc);

/// parse_document + build_model.
HomogeneousModel parse_model(const std::string& text);

}  // namespace cyfin

#endif
