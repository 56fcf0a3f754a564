/* Copyright 2026 The smti Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libsmti.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns an smti_status; on failure the message is available
 * from smti_last_error() until the next call on the same thread. Strings
 * returned through char** are owned by the caller and released with
 * smti_string_free(). Indices are 0-based.
 */

#ifndef SMTI_SMTI_H_
#define SMTI_SMTI_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SMTI_BUILDING_LIBRARY)
#    define SMTI_API __declspec(dllexport)
#  else
#    define SMTI_API __declspec(dllimport)
#  endif
#else
#  define SMTI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smti_status {
  SMTI_OK = 0,
  SMTI_ERR_ARGUMENT = 1, /* bad argument, out-of-range index, null pointer */
  SMTI_ERR_DOMAIN = 2,   /* operation not defined for the given data */
  SMTI_ERR_PARSE = 3,    /* malformed text input */
  SMTI_ERR_SIZE = 4,     /* instance too large for the requested solver */
  SMTI_ERR_INTERNAL = 5
} smti_status;

typedef enum smti_objective {
  SMTI_MAX_CARDINALITY = 0,
  SMTI_EGALITARIAN = 1,
  SMTI_SEX_EQUAL = 2
} smti_objective;

typedef enum smti_solver {
  SMTI_SOLVER_BRUTE_FORCE = 0,
  SMTI_SOLVER_BRANCH_AND_BOUND = 1,
  SMTI_SOLVER_LTIU = 2,
  SMTI_SOLVER_GA = 3,
  SMTI_SOLVER_DEFERRED_ACCEPTANCE = 4
} smti_solver;

typedef enum smti_blocking_case {
  SMTI_A3A = 0, /* both single */
  SMTI_A3B = 1, /* man prefers, woman single */
  SMTI_A3C = 2, /* woman prefers, man single */
  SMTI_A3D = 3  /* both prefer */
} smti_blocking_case;

typedef struct smti_instance smti_instance;
typedef struct smti_matching smti_matching;
typedef struct smti_report smti_report;

typedef struct smti_blocking_pair {
  int man;
  int woman;
  smti_blocking_case kind;
} smti_blocking_pair;

typedef struct smti_solve_options {
  smti_solver solver;
  smti_objective objective;
  uint64_t seed;
  int64_t time_limit_ms; /* branch and bound only; 0 = none */
  uint64_t ltiu_steps;
  double ltiu_walk_p;
  int ga_population;
  int ga_rounds;
  double ga_crossover_p;
  double ga_mutation_p;
} smti_solve_options;

SMTI_API const char* smti_version(void);
SMTI_API const char* smti_last_error(void);
SMTI_API void smti_string_free(char* s);

/* Instances */
SMTI_API smti_status smti_instance_parse(const char* text, smti_instance** out);
SMTI_API smti_status smti_instance_generate(int n, double p1, double p2, uint64_t seed,
                                            smti_instance** out);
SMTI_API smti_status smti_instance_emit(const smti_instance* inst, char** out);
SMTI_API int smti_instance_size(const smti_instance* inst);
/* Writes 1 to *out when the pair is mutually acceptable, 0 otherwise. */
SMTI_API smti_status smti_instance_acceptable(const smti_instance* inst, int man, int woman,
                                              int* out);
SMTI_API void smti_instance_free(smti_instance* inst);

/* Seed of replicate r in grid cell (i, j); see the bench documentation. */
SMTI_API uint64_t smti_grid_seed(uint64_t base_seed, uint64_t p1_index, uint64_t p2_index,
                                 uint64_t replicate);

/* Matchings */
SMTI_API smti_status smti_matching_new(const smti_instance* inst, smti_matching** out);
SMTI_API smti_status smti_matching_parse(const smti_instance* inst, const char* text,
                                         smti_matching** out);
SMTI_API smti_status smti_matching_emit(const smti_matching* mu, char** out);
SMTI_API smti_status smti_matching_match(smti_matching* mu, const smti_instance* inst, int man,
                                         int woman);
/* Woman matched to man, or -1. */
SMTI_API int smti_matching_wife(const smti_matching* mu, int man);
/* Man matched to woman, or -1. */
SMTI_API int smti_matching_husband(const smti_matching* mu, int woman);
SMTI_API int smti_matching_cardinality(const smti_matching* mu);
SMTI_API void smti_matching_free(smti_matching* mu);

/* Stability. smti_blocking_pairs writes up to `capacity` pairs (man-major)
 * and the total count to *count; pass capacity 0 to query the count. */
SMTI_API smti_status smti_blocking_pairs(const smti_instance* inst, const smti_matching* mu,
                                         smti_blocking_pair* pairs, size_t capacity,
                                         size_t* count);
SMTI_API smti_status smti_is_stable(const smti_instance* inst, const smti_matching* mu,
                                    int* out);
SMTI_API smti_status smti_cost(const smti_instance* inst, const smti_matching* mu,
                               smti_objective objective, int64_t* out);

/* Solving */
SMTI_API void smti_solve_options_init(smti_solve_options* options);
SMTI_API smti_status smti_solve(const smti_instance* inst, const smti_solve_options* options,
                                smti_report** out);
SMTI_API const smti_matching* smti_report_matching(const smti_report* report);
SMTI_API int64_t smti_report_cost(const smti_report* report);
SMTI_API int smti_report_optimal(const smti_report* report);
SMTI_API int smti_report_timed_out(const smti_report* report);
SMTI_API uint64_t smti_report_nodes(const smti_report* report);
SMTI_API uint64_t smti_report_steps(const smti_report* report);
SMTI_API uint64_t smti_report_restarts(const smti_report* report);
SMTI_API double smti_report_elapsed_ms(const smti_report* report);
/* Local search only; return 0 and leave *out untouched otherwise. */
SMTI_API int smti_report_raw_eval(const smti_report* report, int64_t* out);
SMTI_API int smti_report_final_eval(const smti_report* report, int64_t* out);
/* "none", "greedy", "deferred-acceptance", or "" for other solvers. */
SMTI_API const char* smti_report_stabilized_by(const smti_report* report);
SMTI_API void smti_report_free(smti_report* report);

/* Encoders. variant < 0 emits the decision program without weak constraints. */
SMTI_API smti_status smti_emit_asp(const smti_instance* inst, int variant, char** out);
SMTI_API smti_status smti_emit_lp(const smti_instance* inst, smti_objective objective,
                                  char** out);

/* Benchmark grid: parses the config text, runs it on `jobs` threads and
 * returns the CSV. *output_path receives the config's output key; either
 * pointer may be null. */
SMTI_API smti_status smti_bench_run(const char* config_text, int jobs, char** csv,
                                    char** output_path);

#ifdef __cplusplus
}
#endif

#endif /* SMTI_SMTI_H_ */
