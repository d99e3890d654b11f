// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyfin/model_io.hpp"

#include <set>

namespace cyfin {

namespace {

using nlohmann::json;

Vec json_to_vec(const json& a, const std::string& field) {
  if (!a.is_array()) throw ParseError(field + ": expected an array of numbers");
  Vec v(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number()) throw ParseError(field + ": expected an array of numbers");
    v[i] = a[i].get<double>();
  }
  return v;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Mat json_to_mat(const json& rows, const std::string& field) {
  if (!rows.is_array() || rows.empty()) throw ParseError(field + ": expected an array of rows");
  Mat m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    Vec row = json_to_vec(rows[i], field);
    if (row.size() != m.cols()) throw ParseError(field + ": ragged matrix");
    m.row(i) = row;
  }
  return m;
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

bool approx_equal(const Vec& a, const Vec& b) {
  return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace

bool ModelDocument::operator==(const ModelDocument& other) const {
  if (dim != other.dim || basis != other.basis ||
      chain_basis_declared != other.chain_basis_declared ||
      brackets.size() != other.brackets.size() || h_basis.size() != other.h_basis.size())
    return false;
  for (size_t n = 0; n < brackets.size(); ++n) {
    const auto& a = brackets[n];
    const auto& b = other.brackets[n];
    if (a.i != b.i || a.j != b.j || a.k != b.k || a.value != b.value) return false;
  }
  for (size_t n = 0; n < h_basis.size(); ++n)
    if (!approx_equal(h_basis[n], other.h_basis[n])) return false;
  const auto& m = metric;
  const auto& o = other.metric;
  if (m.kind != o.kind || m.phi_name != o.phi_name || m.phi_params != o.phi_params) return false;
  if (m.alpha.has_value() != o.alpha.has_value() || m.x.has_value() != o.x.has_value())
    return false;
  if (m.alpha && (*m.alpha - *o.alpha).cwiseAbs().maxCoeff() != 0.0) return false;
  if (m.x && !approx_equal(*m.x, *o.x)) return false;
  return true;
}

ModelDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  ModelDocument doc;
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("dim: required integer field");
  doc.dim = j["dim"].get<int>();
  if (doc.dim < 1) throw ParseError("dim: must be positive");

  if (j.contains("basis")) {
    for (const auto& b : j["basis"]) doc.basis.push_back(b.get<std::string>());
    if (static_cast<int>(doc.basis.size()) != doc.dim)
      throw ParseError("basis: label count must equal dim");
  }

  std::set<std::tuple<int, int, int>> seen;
  if (j.contains("brackets")) {
    for (const auto& e : j["brackets"]) {
      BracketEntry entry;
      try {
        entry.i = e.at("i").get<int>();
        entry.j = e.at("j").get<int>();
        entry.k = e.at("k").get<int>();
        entry.value = e.at("value").get<double>();
      } catch (const json::exception&) {
        throw ParseError("brackets: each entry needs integer i, j, k and a numeric value");
      }
      if (entry.i < 1 || entry.i > doc.dim || entry.j < 1 || entry.j > doc.dim || entry.k < 1 ||
          entry.k > doc.dim)
        throw ParseError("brackets: indices must be 1-based and <= dim");
      if (entry.i == entry.j) throw ParseError("brackets: [e_i, e_i] is always zero");
      // An entry and its antisymmetric mirror describe the same coefficient.
      auto key = std::make_tuple(std::min(entry.i, entry.j), std::max(entry.i, entry.j), entry.k);
      if (!seen.insert(key).second)
        throw ParseError("brackets: duplicate entry for (i, j, k) = (" + std::to_string(entry.i) +
                         ", " + std::to_string(entry.j) + ", " + std::to_string(entry.k) + ")");
      doc.brackets.push_back(entry);
    }
  }

  if (j.contains("h_basis")) {
    for (const auto& row : j["h_basis"]) {
      Vec v = json_to_vec(row, "h_basis");
      if (v.size() != doc.dim) throw ParseError("h_basis: vector length must equal dim");
      doc.h_basis.push_back(v);
    }
  }

  if (!j.contains("metric") || !j["metric"].is_object())
    throw ParseError("metric: required object field");
  const json& m = j["metric"];
  doc.metric.kind = m.value("kind", "");
  if (doc.metric.kind != "riemannian" && doc.metric.kind != "alpha_beta" &&
      doc.metric.kind != "randers")
    throw ParseError("metric.kind: must be riemannian, alpha_beta, or randers");
  if (m.contains("alpha")) doc.metric.alpha = json_to_mat(m["alpha"], "metric.alpha");
  if (m.contains("x")) doc.metric.x = json_to_vec(m["x"], "metric.x");
  if (doc.metric.kind != "riemannian" && !doc.metric.x)
    throw ParseError("metric.x: required for non-Riemannian metrics");
  if (doc.metric.kind == "alpha_beta") {
    if (!m.contains("phi") || !m["phi"].is_object() || !m["phi"].contains("name"))
      throw ParseError("metric.phi: alpha_beta metrics need {name, params}");
    doc.metric.phi_name = m["phi"]["name"].get<std::string>();
    if (m["phi"].contains("params"))
      for (const auto& p : m["phi"]["params"]) doc.metric.phi_params.push_back(p.get<double>());
  }

  doc.chain_basis_declared = j.value("chain_basis_declared", false);
  return doc;
}

std::string serialize_document(const ModelDocument& doc) {
  json j;
  j["dim"] = doc.dim;
  if (!doc.basis.empty()) j["basis"] = doc.basis;
  j["brackets"] = json::array();
  for (const auto& e : doc.brackets)
    j["brackets"].push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"value", e.value}});
  if (!doc.h_basis.empty()) {
    j["h_basis"] = json::array();
    for (const auto& v : doc.h_basis) j["h_basis"].push_back(vec_to_json(v));
  }
  json m;
  m["kind"] = doc.metric.kind;
  if (doc.metric.alpha) m["alpha"] = mat_to_json(*doc.metric.alpha);
  if (doc.metric.x) m["x"] = vec_to_json(*doc.metric.x);
  if (doc.metric.kind == "alpha_beta")
    m["phi"] = {{"name", doc.metric.phi_name}, {"params", doc.metric.phi_params}};
  j["metric"] = m;
  j["chain_basis_declared"] = doc.chain_basis_declared;
  return j.dump(2);
}

HomogeneousModel build_model(const ModelDocument& doc) {
  const int n = doc.dim;
  std::vector<Mat> constants(n, Mat::Zero(n, n));
  for (const auto& e : doc.brackets) {
    constants[e.k - 1](e.i - 1, e.j - 1) += e.value;
    constants[e.k - 1](e.j - 1, e.i - 1) -= e.value;
  }
  LieAlgebra algebra(n, std::move(constants), doc.basis);

  Subspace h(n);
  if (!doc.h_basis.empty()) {
    Mat cols(n, doc.h_basis.size());
    for (size_t i = 0; i < doc.h_basis.size(); ++i) cols.col(i) = doc.h_basis[i];
    h = Subspace::span(cols);
  }
  // m defaults to the orthogonal complement of h.
  Subspace m_space = Subspace::span(Mat::Identity(n, n));
  if (h.dim() > 0) {
    Mat proj = Mat::Identity(n, n) - h.basis() * h.basis().transpose();
    m_space = Subspace::span_of(proj);
  }
  ReductiveDecomposition decomp(std::move(algebra), std::move(h), std::move(m_space));

  const int dm = decomp.dim_m();
  Mat gram = doc.metric.alpha.value_or(Mat::Identity(dm, dm));
  if (gram.rows() != dm)
    throw ParseError("metric.alpha: must be " + std::to_string(dm) + "x" + std::to_string(dm) +
                     " (the dimension of m)");
  EuclideanForm alpha{gram};

  NormModel norm = NormModel::riemannian(alpha);
  if (doc.metric.kind != "riemannian") {
    Vec x = *doc.metric.x;
    if (x.size() != dm) throw ParseError("metric.x: length must equal dim m");
    PhiProfile profile = doc.metric.kind == "randers"
                             ? make_phi_profile("randers")
                             : make_phi_profile(doc.metric.phi_name, doc.metric.phi_params);
    norm = NormModel::alpha_beta(AlphaBetaNorm(alpha, std::move(x), std::move(profile)));
  }
  return HomogeneousModel(std::move(decomp), std::move(norm), doc.chain_basis_declared);
}

HomogeneousModel parse_model(const std::string& text) { return build_model(parse_document(text)); }

}  // namespace cyfin
