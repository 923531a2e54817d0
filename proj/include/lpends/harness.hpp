// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpends/warp.hpp"
#include "lpends/weight.hpp"

namespace lpends {

struct WarpSpec {
  WarpKind kind = WarpKind::hyperbolic;
  std::vector<double> params;  // custom: interleaved (r, w) samples
};

struct WeightSpec {
  WeightKind kind = WeightKind::constant;
  double param = 0.0;
};

struct ExperimentConfig {
  WarpSpec warp;
  double R = 0.0, R_max = 8.0;
  int N = 256, n = 2, mode_count = 64;
  int cutoff_smoothness = 1;
  std::vector<WeightSpec> weights = {{WeightKind::constant, 0.0},
                                     {WeightKind::polynomial, 2.0},
                                     {WeightKind::warp_power, 1.0},
                                     {WeightKind::warp_power, -1.0}};
  std::vector<double> p_list = {1.5, 2.0, 3.0, 4.0};
  int K = -1;  // dyadic truncation; -1 = automatic
  // stopping-time decomposition
  std::vector<double> cz_lambda_fracs = {0.05, 0.15, 0.35, 0.6};
  double cz_D = 8.0;
  int cz_instances = 25;
  // kernel machinery
  int K_sym = 16;
  double ann_lo = 1.0, ann_hi = 4.0;
  std::vector<int> M_list = {6, 12};
  double kernel_len_r = 4.0, kernel_len_th = 4.0;
  int kernel_Nr = 256, kernel_Nth = 128;
  // corpora
  int corpus_size = 24;
  std::uint64_t seed = 20260809;
  std::string out_dir = "out";
};

ExperimentConfig default_config();
ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);
// Throws ConfigError naming the offending field.
void validate_config(const ExperimentConfig& cfg);

struct ReportRow {
  std::string suite;
  std::string warp;
  int n = 2;
  int N = 0;
  std::string param_name;
  double param_value = 0.0;
  std::string quantity;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::int64_t millis = 0;

  bool operator==(const ReportRow&) const = default;
};

enum class Suite {
  partition,
  spectrum,
  equivalence,
  remainder,
  localization,
  khintchine,
  cz,
  weak11,
  schur,
  commutator,
  all,
};

const char* to_string(Suite s);
Suite suite_from_string(const std::string& s);

std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg, Suite suite);

enum class ReportFormat { csv, json };

std::string rows_to_csv(const std::vector<ReportRow>& rows, bool with_timings = false);
std::string rows_to_json(const std::vector<ReportRow>& rows, bool with_timings = false);
std::vector<ReportRow> rows_from_json(const std::string& text);

// Writes <dir>/<stem>.{csv|json} and returns the path.  Timings are zeroed by
// default so identical (config, seed) runs produce identical bytes.
std::string emit_report(const std::vector<ReportRow>& rows, const std::string& dir,
                        const std::string& stem, ReportFormat fmt, bool with_timings = false);

// suite -> verifier names; every verifier belongs to exactly one suite.
std::vector<std::pair<Suite, std::vector<std::string>>> verifier_coverage();

}  // namespace lpends
