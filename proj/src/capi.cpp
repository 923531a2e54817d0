// SPDX-License-Identifier: Apache-2.0
#include "lpends/lpends.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lpends/errors.hpp"
#include "lpends/harness.hpp"

using lpends::ErrorCode;

struct lpe_config {
  lpends::ExperimentConfig cfg;
};

struct lpe_report {
  std::vector<lpends::ReportRow> rows;
};

namespace {

thread_local std::string g_last_error;

lpe_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidWarp: return LPE_ERR_INVALID_WARP;
    case ErrorCode::NotTemperate: return LPE_ERR_NOT_TEMPERATE;
    case ErrorCode::GridTooCoarse: return LPE_ERR_GRID_TOO_COARSE;
    case ErrorCode::InvalidMode: return LPE_ERR_INVALID_MODE;
    case ErrorCode::DomainError: return LPE_ERR_DOMAIN;
    case ErrorCode::EigenFailure: return LPE_ERR_EIGEN;
    case ErrorCode::InvalidIndex: return LPE_ERR_INVALID_INDEX;
    case ErrorCode::OutOfDomain: return LPE_ERR_OUT_OF_DOMAIN;
    case ErrorCode::NoParent: return LPE_ERR_NO_PARENT;
    case ErrorCode::AdmissibilityError: return LPE_ERR_ADMISSIBILITY;
    case ErrorCode::ResolutionError: return LPE_ERR_RESOLUTION;
    case ErrorCode::PreconditionError: return LPE_ERR_PRECONDITION;
    case ErrorCode::ConfigError: return LPE_ERR_CONFIG;
    case ErrorCode::IoError: return LPE_ERR_IO;
  }
  return LPE_ERR_UNKNOWN;
}

template <typename Fn>
lpe_status guarded(Fn&& fn) {
  try {
    fn();
    return LPE_OK;
  } catch (const lpends::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LPE_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown failure";
    return LPE_ERR_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* lpe_version(void) { return "1.0.0"; }

const char* lpe_last_error(void) { return g_last_error.c_str(); }

lpe_status lpe_config_default(lpe_config** out) {
  if (!out) return LPE_ERR_DOMAIN;
  return guarded([&] { *out = new lpe_config{lpends::default_config()}; });
}

lpe_status lpe_config_from_json(const char* json_text, lpe_config** out) {
  if (!json_text || !out) return LPE_ERR_DOMAIN;
  return guarded([&] { *out = new lpe_config{lpends::config_from_json(json_text)}; });
}

lpe_status lpe_config_load_file(const char* path, lpe_config** out) {
  if (!path || !out) return LPE_ERR_DOMAIN;
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) lpends::fail(ErrorCode::IoError, std::string("cannot open ") + path);
    std::ostringstream text;
    text << in.rdbuf();
    *out = new lpe_config{lpends::config_from_json(text.str())};
  });
}

lpe_status lpe_config_validate(const lpe_config* cfg) {
  if (!cfg) return LPE_ERR_DOMAIN;
  return guarded([&] { lpends::validate_config(cfg->cfg); });
}

lpe_status lpe_config_to_json(const lpe_config* cfg, char** out) {
  if (!cfg || !out) return LPE_ERR_DOMAIN;
  return guarded([&] { *out = dup_string(lpends::config_to_json(cfg->cfg)); });
}

lpe_status lpe_config_set_seed(lpe_config* cfg, uint64_t seed) {
  if (!cfg) return LPE_ERR_DOMAIN;
  cfg->cfg.seed = seed;
  return LPE_OK;
}

lpe_status lpe_config_set_out_dir(lpe_config* cfg, const char* dir) {
  if (!cfg || !dir) return LPE_ERR_DOMAIN;
  cfg->cfg.out_dir = dir;
  return LPE_OK;
}

lpe_status lpe_config_get_out_dir(const lpe_config* cfg, char** out) {
  if (!cfg || !out) return LPE_ERR_DOMAIN;
  return guarded([&] { *out = dup_string(cfg->cfg.out_dir); });
}

void lpe_config_free(lpe_config* cfg) { delete cfg; }

lpe_status lpe_run_suite(const lpe_config* cfg, const char* suite, lpe_report** out) {
  if (!cfg || !suite || !out) return LPE_ERR_DOMAIN;
  return guarded([&] {
    auto rows = lpends::run_experiment(cfg->cfg, lpends::suite_from_string(suite));
    *out = new lpe_report{std::move(rows)};
  });
}

lpe_status lpe_report_row_count(const lpe_report* rep, size_t* out) {
  if (!rep || !out) return LPE_ERR_DOMAIN;
  *out = rep->rows.size();
  return LPE_OK;
}

lpe_status lpe_report_row(const lpe_report* rep, size_t index, lpe_row_view* out) {
  if (!rep || !out || index >= rep->rows.size()) return LPE_ERR_DOMAIN;
  const lpends::ReportRow& r = rep->rows[index];
  out->suite = r.suite.c_str();
  out->warp = r.warp.c_str();
  out->n = r.n;
  out->N = r.N;
  out->param_name = r.param_name.c_str();
  out->param_value = r.param_value;
  out->quantity = r.quantity.c_str();
  out->value = r.value;
  out->threshold = r.threshold;
  out->pass = r.pass ? 1 : 0;
  out->seed = r.seed;
  out->millis = r.millis;
  return LPE_OK;
}

lpe_status lpe_report_all_pass(const lpe_report* rep, int* out) {
  if (!rep || !out) return LPE_ERR_DOMAIN;
  *out = 1;
  for (const auto& r : rep->rows)
    if (!r.pass) *out = 0;
  return LPE_OK;
}

lpe_status lpe_report_write(const lpe_report* rep, const char* dir, const char* stem,
                            const char* format, int with_timings, char** out_path) {
  if (!rep || !dir || !stem || !format) return LPE_ERR_DOMAIN;
  return guarded([&] {
    lpends::ReportFormat fmt;
    std::string f = format;
    if (f == "csv")
      fmt = lpends::ReportFormat::csv;
    else if (f == "json")
      fmt = lpends::ReportFormat::json;
    else
      lpends::fail(ErrorCode::DomainError, "format must be csv or json");
    std::string path = lpends::emit_report(rep->rows, dir, stem, fmt, with_timings != 0);
    if (out_path) *out_path = dup_string(path);
  });
}

void lpe_report_free(lpe_report* rep) { delete rep; }

void lpe_string_free(char* s) { delete[] s; }

}  // extern "C"
