// SPDX-License-Identifier: Apache-2.0
//
// lp-ends: experiment runner for the Littlewood-Paley verification library.
// Talks to the shared library exclusively through its C API.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "lpends/lpends.h"

namespace {

int fail_with(const char* what) {
  std::fprintf(stderr, "lp-ends: %s: %s\n", what, lpe_last_error());
  return 2;
}

lpe_config* load_config(const std::string& path) {
  lpe_config* cfg = nullptr;
  lpe_status st = path.empty() ? lpe_config_default(&cfg) : lpe_config_load_file(path.c_str(), &cfg);
  if (st != LPE_OK) {
    fail_with("config");
    return nullptr;
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood-Paley decompositions on model ends: numerical verification harness"};
  app.require_subcommand(1);

  std::string config_path, suite = "all", out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false, timings = false;

  CLI::App* run = app.add_subcommand("run", "run a verification suite and write reports");
  run->add_option("--config", config_path, "config JSON path (defaults built in)");
  run->add_option("--suite", suite,
                  "partition|spectrum|equivalence|remainder|localization|khintchine|cz|weak11|"
                  "schur|commutator|all");
  run->add_option("--seed", seed, "override the config seed")->each([&](const std::string&) {
    seed_set = true;
  });
  run->add_option("--out", out_dir, "override the output directory");
  run->add_flag("--timings", timings, "record wall-clock millis in the reports");

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "check a config file and echo it back");
  validate->add_option("--config", validate_path, "config JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    lpe_config* cfg = load_config(validate_path);
    if (!cfg) return 2;
    if (lpe_config_validate(cfg) != LPE_OK) {
      lpe_config_free(cfg);
      return fail_with("validate");
    }
    char* echo = nullptr;
    if (lpe_config_to_json(cfg, &echo) == LPE_OK) {
      std::printf("%s\n", echo);
      lpe_string_free(echo);
    }
    lpe_config_free(cfg);
    return 0;
  }

  lpe_config* cfg = load_config(config_path);
  if (!cfg) return 2;
  if (seed_set) lpe_config_set_seed(cfg, seed);
  if (!out_dir.empty()) lpe_config_set_out_dir(cfg, out_dir.c_str());

  lpe_report* rep = nullptr;
  if (lpe_run_suite(cfg, suite.c_str(), &rep) != LPE_OK) {
    lpe_config_free(cfg);
    return fail_with("run");
  }

  size_t count = 0;
  lpe_report_row_count(rep, &count);
  int failures = 0;
  for (size_t i = 0; i < count; ++i) {
    lpe_row_view row;
    lpe_report_row(rep, i, &row);
    if (!row.pass) ++failures;
    std::printf("[%s] %-32s %-34s value=%.6g threshold=%.6g %s\n", row.suite, row.param_name,
                row.quantity, row.value, row.threshold, row.pass ? "pass" : "FAIL");
  }

  char* dir = nullptr;
  lpe_config_get_out_dir(cfg, &dir);
  char* csv_path = nullptr;
  lpe_status wst = lpe_report_write(rep, dir, suite.c_str(), "csv", timings ? 1 : 0, &csv_path);
  if (wst == LPE_OK) {
    char* json_path = nullptr;
    lpe_report_write(rep, dir, suite.c_str(), "json", timings ? 1 : 0, &json_path);
    std::printf("%zu rows, %d failing; reports: %s\n", count, failures, csv_path);
    lpe_string_free(csv_path);
    if (json_path) lpe_string_free(json_path);
  } else {
    fail_with("write");
  }
  lpe_string_free(dir);
  lpe_report_free(rep);
  lpe_config_free(cfg);
  return failures == 0 && wst == LPE_OK ? 0 : 1;
}
