/* SPDX-License-Identifier: Apache-2.0
 *
 * C API of the lp-ends library.  Opaque handles, integer status codes; every
 * function returns LPE_OK (0) on success and a nonzero code otherwise, with a
 * human-readable message available from lpe_last_error().
 */
#ifndef LPENDS_LPENDS_H
#define LPENDS_LPENDS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpe_status {
  LPE_OK = 0,
  LPE_ERR_INVALID_WARP = 1,
  LPE_ERR_NOT_TEMPERATE = 2,
  LPE_ERR_GRID_TOO_COARSE = 3,
  LPE_ERR_INVALID_MODE = 4,
  LPE_ERR_DOMAIN = 5,
  LPE_ERR_EIGEN = 6,
  LPE_ERR_INVALID_INDEX = 7,
  LPE_ERR_OUT_OF_DOMAIN = 8,
  LPE_ERR_NO_PARENT = 9,
  LPE_ERR_ADMISSIBILITY = 10,
  LPE_ERR_RESOLUTION = 11,
  LPE_ERR_PRECONDITION = 12,
  LPE_ERR_CONFIG = 13,
  LPE_ERR_IO = 14,
  LPE_ERR_UNKNOWN = 99,
} lpe_status;

typedef struct lpe_config lpe_config;
typedef struct lpe_report lpe_report;

typedef struct lpe_row_view {
  const char* suite;
  const char* warp;
  int n;
  int N;
  const char* param_name;
  double param_value;
  const char* quantity;
  double value;
  double threshold;
  int pass;
  uint64_t seed;
  int64_t millis;
} lpe_row_view;

const char* lpe_version(void);

/* Message describing the most recent failure on this thread. */
const char* lpe_last_error(void);

/* Configuration ----------------------------------------------------------- */
lpe_status lpe_config_default(lpe_config** out);
lpe_status lpe_config_from_json(const char* json_text, lpe_config** out);
lpe_status lpe_config_load_file(const char* path, lpe_config** out);
lpe_status lpe_config_validate(const lpe_config* cfg);
/* Serialized form; caller frees with lpe_string_free. */
lpe_status lpe_config_to_json(const lpe_config* cfg, char** out);
lpe_status lpe_config_set_seed(lpe_config* cfg, uint64_t seed);
lpe_status lpe_config_set_out_dir(lpe_config* cfg, const char* dir);
lpe_status lpe_config_get_out_dir(const lpe_config* cfg, char** out);
void lpe_config_free(lpe_config* cfg);

/* Experiments ------------------------------------------------------------- */
/* suite: partition|spectrum|equivalence|remainder|localization|khintchine|
 *        cz|weak11|schur|commutator|all                                     */
lpe_status lpe_run_suite(const lpe_config* cfg, const char* suite, lpe_report** out);

lpe_status lpe_report_row_count(const lpe_report* rep, size_t* out);
/* The views borrow storage owned by the report. */
lpe_status lpe_report_row(const lpe_report* rep, size_t index, lpe_row_view* out);
lpe_status lpe_report_all_pass(const lpe_report* rep, int* out);
/* format: "csv" or "json"; writes <dir>/<stem>.<ext>, path returned via out. */
lpe_status lpe_report_write(const lpe_report* rep, const char* dir, const char* stem,
                            const char* format, int with_timings, char** out_path);
void lpe_report_free(lpe_report* rep);

void lpe_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LPENDS_LPENDS_H */
