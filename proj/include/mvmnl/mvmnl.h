/* C interface to the mvmnl assortment library. */
#ifndef MVMNL_H
#define MVMNL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MVMNL_API __declspec(dllexport)
#else
#define MVMNL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mvmnl_status {
  MVMNL_OK = 0,
  MVMNL_E_INVALID_ARGUMENT = 1,
  MVMNL_E_DIMENSION_MISMATCH = 2,
  MVMNL_E_BUDGET_EXCEEDED = 3,
  MVMNL_E_PARSE = 4,
  MVMNL_E_IO = 5,
  MVMNL_E_VALIDATION = 6,
  MVMNL_E_VERTEX_CLASSIFICATION = 7,
  MVMNL_E_CAP_EXCEEDED = 8,
  MVMNL_E_UNSUPPORTED_K = 9,
  MVMNL_E_NO_CERTIFICATE = 10,
  MVMNL_E_INTERNAL = 99
} mvmnl_status;

typedef struct mvmnl_instance mvmnl_instance;
typedef struct mvmnl_solution mvmnl_solution;
typedef struct mvmnl_certificate mvmnl_certificate;
typedef struct mvmnl_bench_result mvmnl_bench_result;

/* Message for the last failing call on this thread; empty after success. */
MVMNL_API const char* mvmnl_last_error(void);
MVMNL_API const char* mvmnl_status_name(mvmnl_status s);
/* Releases strings returned through char** out-parameters. */
MVMNL_API void mvmnl_string_free(char* s);

/* Instances */
MVMNL_API mvmnl_status mvmnl_instance_generate(int n, int m, uint64_t seed, const char* price_dist,
                                               const char* weight_dist, mvmnl_instance** out);
MVMNL_API mvmnl_status mvmnl_instance_read(const char* path, mvmnl_instance** out);
MVMNL_API mvmnl_status mvmnl_instance_from_json(const char* text, mvmnl_instance** out);
MVMNL_API mvmnl_status mvmnl_instance_write(const mvmnl_instance* inst, const char* path);
MVMNL_API mvmnl_status mvmnl_instance_to_json(const mvmnl_instance* inst, char** out);
MVMNL_API mvmnl_status mvmnl_instance_dims(const mvmnl_instance* inst, int* n, int* m);
/* x has n entries and y has m entries, each 0 or 1. */
MVMNL_API mvmnl_status mvmnl_revenue(const mvmnl_instance* inst, const uint8_t* x, const uint8_t* y, double* out);
MVMNL_API void mvmnl_instance_free(mvmnl_instance* inst);

/* Solvers. method is one of aro, k4, k6, gapeps, rr, exact, lp. */
typedef struct mvmnl_solve_options {
  double eps;          /* gapeps block width, 1/eps integral */
  uint64_t cap;        /* gapeps enumeration cap, 0 = default */
  uint64_t seed;       /* rr rounding seed */
  int gapeps_fallback; /* nonzero: use the K=4 candidates when the cap is exceeded */
} mvmnl_solve_options;

MVMNL_API mvmnl_solve_options mvmnl_solve_options_default(void);
MVMNL_API mvmnl_status mvmnl_solve(const mvmnl_instance* inst, const char* method, const mvmnl_solve_options* opts,
                                   mvmnl_solution** out);
MVMNL_API double mvmnl_solution_value(const mvmnl_solution* s);
MVMNL_API double mvmnl_solution_r_star(const mvmnl_solution* s);
MVMNL_API int mvmnl_solution_lp_integral(const mvmnl_solution* s);
/* Copies the 0/1 selection into x (n entries) and y (m entries). */
MVMNL_API mvmnl_status mvmnl_solution_assortment(const mvmnl_solution* s, uint8_t* x, uint8_t* y);
MVMNL_API mvmnl_status mvmnl_solution_to_json(const mvmnl_solution* s, char** out);
MVMNL_API void mvmnl_solution_free(mvmnl_solution* s);

/* Certificates */
MVMNL_API mvmnl_status mvmnl_certificate_preset(int K, mvmnl_certificate** out);
MVMNL_API mvmnl_status mvmnl_certificate_read(const char* path, mvmnl_certificate** out);
MVMNL_API mvmnl_status mvmnl_certificate_write(const mvmnl_certificate* c, const char* path);
MVMNL_API mvmnl_status mvmnl_certificate_to_json(const mvmnl_certificate* c, char** out);
/* report (optional) receives one violated inequality per line. */
MVMNL_API mvmnl_status mvmnl_certificate_check(const mvmnl_certificate* c, double tol, int* pass, double* ratio,
                                               char** report);
MVMNL_API mvmnl_status mvmnl_search_thresholds(int K, double step, mvmnl_certificate** out, double* ratio,
                                               long* grid_points);
MVMNL_API mvmnl_status mvmnl_beta_upper_sample(const mvmnl_certificate* c, long samples, uint64_t seed, double* out);
MVMNL_API void mvmnl_certificate_free(mvmnl_certificate* c);

/* Reductions. from is maxdicut, bdks-cap, bdks-gp, gap or aro-worst.
   graph_json is required for the graph reductions and ignored otherwise.
   param is t for maxdicut, kappa for the bdks reductions and M otherwise. */
MVMNL_API mvmnl_status mvmnl_reduce(const char* from, const char* graph_json, double param, char** instance_json,
                                    char** record_json);

/* Benchmark */
typedef struct mvmnl_bench_config {
  const int* sizes;
  size_t num_sizes;
  int replicates;
  uint64_t seed;
  double eps;
  const char* methods;     /* comma separated; NULL = aro,k4,k6,gapeps,rr */
  const char* price_dist;  /* NULL = library default */
  const char* weight_dist; /* NULL = library default */
  uint64_t cap;            /* 0 = default */
  int threads;             /* 0 = hardware concurrency */
  int timing;              /* 0 writes zero times */
} mvmnl_bench_config;

MVMNL_API mvmnl_bench_config mvmnl_bench_config_default(void);
MVMNL_API mvmnl_status mvmnl_bench_run(const mvmnl_bench_config* cfg, mvmnl_bench_result** out);
MVMNL_API mvmnl_status mvmnl_bench_write(const mvmnl_bench_result* r, const char* prefix);
MVMNL_API mvmnl_status mvmnl_bench_csv(const mvmnl_bench_result* r, char** out);
MVMNL_API mvmnl_status mvmnl_bench_summary_json(const mvmnl_bench_result* r, char** out);
MVMNL_API mvmnl_status mvmnl_bench_summary_table(const mvmnl_bench_result* r, char** out);
MVMNL_API void mvmnl_bench_free(mvmnl_bench_result* r);

#ifdef __cplusplus
}
#endif

#endif
