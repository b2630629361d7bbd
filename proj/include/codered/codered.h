/* Basis reduction for linear codes over finite fields: C interface.
 *
 * Every function returns a codered_status. On failure a message describing
 * the error is available from codered_last_error() on the calling thread.
 * Strings returned through char** are heap allocated and must be released
 * with codered_string_free. Handles are released with their _free function.
 */
#ifndef CODERED_H
#define CODERED_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CODERED_API __declspec(dllexport)
#else
#define CODERED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum codered_status {
  CODERED_OK = 0,
  CODERED_ERR_USAGE = 1,         /* malformed input or violated precondition */
  CODERED_ERR_DOMAIN = 2,        /* input outside the routine's domain */
  CODERED_ERR_RETRYABLE = 3,     /* unlucky random input; resample */
  CODERED_ERR_CAP_EXHAUSTED = 4, /* iteration cap hit; basis holds partial result */
  CODERED_ERR_IO = 5,
  CODERED_ERR_INTERNAL = 6
} codered_status;

typedef enum codered_algorithm {
  CODERED_ALG_LLL = 0,
  CODERED_ALG_BKZ = 1,
  CODERED_ALG_SLIDE = 2,
  CODERED_ALG_FULL_BACKWARD = 3,
  CODERED_ALG_SELECTIVE = 4,
  CODERED_ALG_ONE_BLOCK = 5,
  CODERED_ALG_APPROX_GRIESMER = 6
} codered_algorithm;

typedef enum codered_oracle {
  CODERED_ORACLE_EXHAUSTIVE = 0,
  CODERED_ORACLE_LEE_BRICKELL = 1
} codered_oracle;

/* Generator matrix of a code. */
typedef struct codered_basis codered_basis;
/* Experiment configuration for the benchmark harness. */
typedef struct codered_bench_config codered_bench_config;

typedef struct codered_reduce_params {
  codered_algorithm algorithm;
  size_t beta;
  size_t tau;           /* 0 selects min(k, 3 * ceil(log_q n)) */
  int then_lll;         /* nonzero: run LLL on the output afterwards */
  codered_oracle oracle;
  unsigned lb_p;
  size_t lb_iterations; /* 0 selects 50 * block dimension */
  size_t skip_threshold;
  uint64_t max_iterations; /* 0 selects the algorithm default */
  uint64_t seed;
} codered_reduce_params;

CODERED_API const char* codered_last_error(void);
CODERED_API void codered_string_free(char* s);
CODERED_API const char* codered_version(void);

/* Defaults: LLL, beta 2, exhaustive oracle, Lee-Brickell p = 2. */
CODERED_API void codered_reduce_params_init(codered_reduce_params* params);

/* Basis construction and access. */
CODERED_API codered_status codered_basis_read_file(const char* path, codered_basis** out);
CODERED_API codered_status codered_basis_parse(const char* text, codered_basis** out);
/* Entries are row-major, k * n values in [0, q). Rows may be dependent. */
CODERED_API codered_status codered_basis_from_entries(uint32_t q, size_t k, size_t n, const uint32_t* entries,
                                                      codered_basis** out);
/* Uniform full-rank code, systematized. */
CODERED_API codered_status codered_basis_random(uint32_t q, size_t k, size_t n, uint64_t seed,
                                                codered_basis** out);
/* Uniform k x n matrix as drawn, without rank check or systematization. */
CODERED_API codered_status codered_basis_random_matrix(uint32_t q, size_t k, size_t n, uint64_t seed,
                                                       codered_basis** out);
CODERED_API void codered_basis_free(codered_basis* b);
CODERED_API codered_status codered_basis_dims(const codered_basis* b, uint32_t* q, size_t* k, size_t* n);
CODERED_API codered_status codered_basis_entries(const codered_basis* b, uint32_t* out, size_t capacity);
/* Epipodal lengths; the basis must have full row rank. */
CODERED_API codered_status codered_basis_profile(const codered_basis* b, size_t* out, size_t capacity);
CODERED_API codered_status codered_basis_write_file(const codered_basis* b, const char* path);
CODERED_API codered_status codered_basis_to_text(const codered_basis* b, char** out);

/* Reduces the basis in place. On success, and on CODERED_ERR_CAP_EXHAUSTED,
 * the basis holds the result reached and *report_json (if non-null) receives
 * a JSON run report. The one-block algorithm leaves the basis unchanged and
 * reports the word it found. */
CODERED_API codered_status codered_reduce(codered_basis* b, const codered_reduce_params* params,
                                          char** report_json);

/* Weight distribution of the fundamental domain for an epipodal profile, as
 * JSON {"weights": ["decimal", ...]}. n = 0 means n = sum of the profile. */
CODERED_API codered_status codered_weight_distribution(uint32_t q, const size_t* profile, size_t len, size_t n,
                                                       char** json);

/* Largest first epipodal length allowed by the Griesmer-based bounds for a
 * reduced basis of an [n, k]_q code. algorithm is LLL, BKZ or SLIDE. For BKZ
 * with (beta - 1) not dividing (k - 1) the bound of the longest qualifying
 * prefix is returned; SLIDE requires beta | k. */
CODERED_API codered_status codered_output_bound(codered_algorithm algorithm, uint32_t q, size_t n, size_t k,
                                                size_t beta, uint64_t* out);

/* Benchmark harness. Keys match the TOML config: q, n, k, trials, seed,
 * threads, max_resamples, alg, beta, tau, then_lll, oracle, lb_p,
 * lb_iterations, skip_threshold, max_iterations, json, csv. */
CODERED_API codered_status codered_bench_config_new(codered_bench_config** out);
CODERED_API codered_status codered_bench_config_load(codered_bench_config* cfg, const char* toml_path);
CODERED_API codered_status codered_bench_config_set(codered_bench_config* cfg, const char* key, const char* value);
CODERED_API void codered_bench_config_free(codered_bench_config* cfg);
/* Runs all trials, writes configured outputs and returns the JSON report. */
CODERED_API codered_status codered_bench_run(const codered_bench_config* cfg, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* CODERED_H */
