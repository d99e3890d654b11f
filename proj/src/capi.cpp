// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyfin/cyfin.h"

#include <cstring>
#include <string>

#include "cyfin/conditions.hpp"
#include "cyfin/constructions.hpp"
#include "cyfin/model_io.hpp"

using nlohmann::json;

struct cyfin_model {
  cyfin::HomogeneousModel model;
};

namespace {

thread_local std::string g_last_error = "";

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cyfin_status status_of(const cyfin::Error& e) {
  return static_cast<cyfin_status>(static_cast<int>(e.code()));
}

template <typename Fn>
cyfin_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CYFIN_OK;
  } catch (const cyfin::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CYFIN_ERR_INTERNAL;
  }
}

cyfin::SamplingPlan to_plan(const cyfin_plan* plan) {
  cyfin::SamplingPlan p;
  if (plan) {
    p.seed = plan->seed;
    p.n_base = plan->n_base;
    p.n_pairs = plan->n_pairs;
    p.tol = plan->tol;
  }
  return p;
}

json vec_json(const cyfin::Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json mat_json(const cyfin::Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_json(m.row(i)));
  return rows;
}

json plan_json(const cyfin::SamplingPlan& p, double effective_tol) {
  return {{"seed", p.seed}, {"n_base", p.n_base}, {"n_pairs", p.n_pairs}, {"tol", effective_tol}};
}

}  // namespace

extern "C" {

cyfin_plan cyfin_plan_default(void) { return cyfin_plan{42u, 256, 64, -1.0}; }

cyfin_status cyfin_model_parse(const char* json_text, cyfin_model** out) {
  if (!json_text || !out) {
    g_last_error = "null argument";
    return CYFIN_ERR_INPUT;
  }
  return guarded([&] { *out = new cyfin_model{cyfin::parse_model(json_text)}; });
}

cyfin_status cyfin_model_example(const char* spec, cyfin_model** out) {
  if (!spec || !out) {
    g_last_error = "null argument";
    return CYFIN_ERR_INPUT;
  }
  return guarded([&] { *out = new cyfin_model{cyfin::example_from_string(spec)}; });
}

void cyfin_model_free(cyfin_model* model) { delete model; }

cyfin_status cyfin_list_examples(char** json_out) {
  if (!json_out) {
    g_last_error = "null argument";
    return CYFIN_ERR_INPUT;
  }
  return guarded([&] {
    json j = json::array();
    for (const auto& e : cyfin::list_examples())
      j.push_back({{"name", e.name}, {"params", e.param_names}, {"description", e.description}});
    *json_out = dup_string(j.dump(2));
  });
}

cyfin_status cyfin_check(const cyfin_model* model, const char* condition, const cyfin_plan* plan,
                         char** report_json, int* verdict_out) {
  if (!model || !condition || !report_json) {
    g_last_error = "null argument";
    return CYFIN_ERR_INPUT;
  }
  return guarded([&] {
    cyfin::SamplingPlan p = to_plan(plan);
    std::string name = condition;
    cyfin::ConditionReport report;
    if (name == "cyclic") {
      report = cyfin::check_cyclic(model->model, p);
    } else if (name == "natred") {
      report = cyfin::check_naturally_reductive(model->model, p);
    } else if (name == "douglas") {
      report = cyfin::check_douglas_ab(model->model);
    } else if (name == "symmetric") {
      report = cyfin::check_symmetric(model->model.decomposition());
    } else {
      throw cyfin::InputError("unknown condition: " + name +
                              " (expected cyclic, natred, douglas, or symmetric)");
    }
    json j = report.to_json();
    j["plan"] = plan_json(p, report.tol);
    *report_json = dup_string(j.dump(2));
    if (verdict_out) *verdict_out = static_cast<int>(report.verdict);
  });
}

cyfin_status cyfin_curvature(const cyfin_model* model, const double* y, int ny, const double* u,
                             int nu, char** report_json) {
  if (!model || !y || !report_json) {
    g_last_error = "null argument";
    return CYFIN_ERR_INPUT;
  }
  return guarded([&] {
    const auto& m = model->model;
    if (ny != m.dim_m())
      throw cyfin::InputError("y must have length " + std::to_string(m.dim_m()));
    cyfin::Vec yv = Eigen::Map<const cyfin::Vec>(y, ny);

    json j;
    cyfin::Vec eta = cyfin::spray_eta(m, yv);
    j["y"] = vec_json(yv);
    j["eta"] = vec_json(eta);
    const int n = m.dim_m();
    cyfin::Mat n_op(n, n);
    for (int i = 0; i < n; ++i)
      n_op.col(i) = cyfin::connection_N(m, yv, cyfin::Vec::Unit(n, i));
    j["connection"] = mat_json(n_op);
    cyfin::CurvatureOperator r = cyfin::riemann_operator(m, yv);
    j["riemann"] = mat_json(r.matrix);
    j["ricci"] = cyfin::ricci_scalar(m, yv);
    if (u) {
      if (nu != n) throw cyfin::InputError("u must have length " + std::to_string(n));
      cyfin::Vec uv = Eigen::Map<const cyfin::Vec>(u, nu);
      j["u"] = vec_json(uv);
      j["flag_curvature"] = cyfin::flag_curvature(m, yv, uv);
    }
    *report_json = dup_string(j.dump(2));
  });
}

cyfin_status cyfin_verify_theorems(const cyfin_model* model, const cyfin_plan* plan,
                                   char** report_json, int* consistent_out) {
  if (!model || !report_json) {
    g_last_error = "null argument";
    return CYFIN_ERR_INPUT;
  }
  return guarded([&] {
    cyfin::SamplingPlan p = to_plan(plan);
    cyfin::TheoremSuiteReport report = cyfin::theorem_suite(model->model, p);
    json j = report.to_json();
    j["plan"] = plan_json(p, cyfin::default_tol(model->model, p));
    *report_json = dup_string(j.dump(2));
    if (consistent_out) *consistent_out = report.consistent() ? 1 : 0;
  });
}

void cyfin_string_free(char* s) { delete[] s; }

const char* cyfin_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
