// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end; talks to the core exclusively through the C API.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cyfin/cyfin.h"

namespace {

using nlohmann::json;

constexpr int kExitErrorBase = 2;  // error exit code = 2 + cyfin status

struct ModelOptions {
  std::string model_file;
  std::string example_spec;
};

struct PlanOptions {
  std::uint64_t seed = 42;
  int samples = 256;
  int pairs = 64;
  double tol = -1.0;

  cyfin_plan to_plan() const { return cyfin_plan{seed, samples, pairs, tol}; }
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
  auto* model = cmd->add_option("--model", opts.model_file, "model document (JSON file)");
  auto* example =
      cmd->add_option("--example", opts.example_spec, "registered example, e.g. solvable_cyclic(3,1,0.5)");
  model->excludes(example);
}

void add_plan_options(CLI::App* cmd, PlanOptions& opts) {
  cmd->add_option("--seed", opts.seed, "sampling seed");
  cmd->add_option("--samples", opts.samples, "number of base directions y");
  cmd->add_option("--pairs", opts.pairs, "pairs per base direction");
  cmd->add_option("--tol", opts.tol, "verdict tolerance (default per path)");
}

int fail(cyfin_status status) {
  std::cerr << "error: " << cyfin_last_error() << "\n";
  return kExitErrorBase + static_cast<int>(status);
}

using ModelHandle = std::unique_ptr<cyfin_model, decltype(&cyfin_model_free)>;

int load_model(const ModelOptions& opts, ModelHandle& out) {
  cyfin_model* raw = nullptr;
  cyfin_status status;
  if (!opts.example_spec.empty()) {
    status = cyfin_model_example(opts.example_spec.c_str(), &raw);
  } else if (!opts.model_file.empty()) {
    std::ifstream in(opts.model_file);
    if (!in) {
      std::cerr << "error: cannot read " << opts.model_file << "\n";
      return kExitErrorBase + CYFIN_ERR_INPUT;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    status = cyfin_model_parse(buffer.str().c_str(), &raw);
  } else {
    std::cerr << "error: provide --model FILE or --example NAME\n";
    return kExitErrorBase + CYFIN_ERR_INPUT;
  }
  if (status != CYFIN_OK) return fail(status);
  out = ModelHandle(raw, cyfin_model_free);
  return 0;
}

std::vector<double> parse_vector(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(std::stod(token));
  return out;
}

void print_report(const std::string& report, const std::string& format) {
  if (format == "json") {
    std::cout << report << "\n";
    return;
  }
  json j = json::parse(report);
  if (j.contains("condition")) {
    std::cout << j["condition"].get<std::string>() << ": " << j["verdict"].get<std::string>()
              << "  (worst residual " << j["worst_residual"].get<double>() << ", "
              << j["samples"].get<long>() << " samples, "
              << (j["exact"].get<bool>() ? "exact" : "sampled") << ")\n";
  } else if (j.contains("subchecks")) {
    for (const auto& s : j["subchecks"])
      std::cout << s["name"].get<std::string>() << ": " << s["status"].get<std::string>() << "  "
                << s["detail"].get<std::string>() << "\n";
    std::cout << "consistent: " << (j["consistent"].get<bool>() ? "yes" : "no") << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homogeneous Finsler metric toolkit"};
  app.require_subcommand(1);

  ModelOptions model_opts;
  PlanOptions plan_opts;
  std::string format = "json";
  std::string condition;
  std::string y_csv, u_csv;

  auto* check = app.add_subcommand("check", "run a condition check");
  check->add_option("condition", condition, "cyclic | natred | douglas | symmetric")->required();
  add_model_options(check, model_opts);
  add_plan_options(check, plan_opts);
  check->add_option("--format", format, "json | text");

  auto* curvature = app.add_subcommand("curvature", "spray/connection/curvature at a direction");
  add_model_options(curvature, model_opts);
  curvature->add_option("--y", y_csv, "base direction, comma-separated")->required();
  curvature->add_option("--u", u_csv, "flag pole (optional)");
  curvature->add_option("--format", format, "json | text");

  auto* verify = app.add_subcommand("verify-theorems", "run the theorem cross-check suite");
  add_model_options(verify, model_opts);
  add_plan_options(verify, plan_opts);
  verify->add_option("--format", format, "json | text");

  auto* list = app.add_subcommand("list-examples", "list the registered example models");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    char* out = nullptr;
    cyfin_status status = cyfin_list_examples(&out);
    if (status != CYFIN_OK) return fail(status);
    std::cout << out << "\n";
    cyfin_string_free(out);
    return 0;
  }

  ModelHandle model(nullptr, cyfin_model_free);
  if (int rc = load_model(model_opts, model); rc != 0) return rc;

  if (check->parsed()) {
    cyfin_plan plan = plan_opts.to_plan();
    char* report = nullptr;
    int verdict = 0;
    cyfin_status status = cyfin_check(model.get(), condition.c_str(), &plan, &report, &verdict);
    if (status != CYFIN_OK) return fail(status);
    print_report(report, format);
    cyfin_string_free(report);
    return verdict;  // 0 holds, 1 fails, 2 inconclusive
  }

  if (curvature->parsed()) {
    std::vector<double> y, u;
    try {
      y = parse_vector(y_csv);
      if (!u_csv.empty()) u = parse_vector(u_csv);
    } catch (const std::exception&) {
      std::cerr << "error: vectors are comma-separated decimals, e.g. --y 0,0,1\n";
      return kExitErrorBase + CYFIN_ERR_INPUT;
    }
    char* report = nullptr;
    cyfin_status status =
        cyfin_curvature(model.get(), y.data(), static_cast<int>(y.size()),
                        u.empty() ? nullptr : u.data(), static_cast<int>(u.size()), &report);
    if (status != CYFIN_OK) return fail(status);
    print_report(report, format);
    cyfin_string_free(report);
    return 0;
  }

  if (verify->parsed()) {
    cyfin_plan plan = plan_opts.to_plan();
    char* report = nullptr;
    int consistent = 0;
    cyfin_status status = cyfin_verify_theorems(model.get(), &plan, &report, &consistent);
    if (status != CYFIN_OK) return fail(status);
    print_report(report, format);
    cyfin_string_free(report);
    return consistent ? 0 : 1;
  }

  return kExitErrorBase + CYFIN_ERR_INPUT;
}
