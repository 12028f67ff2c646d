/* C interface to the normvol library. All results that are more than a
 * scalar come back as JSON strings owned by the caller (nv_string_free).
 * Every call returning nv_status records a message retrievable with
 * nv_last_error() on the same thread when it fails. */
#ifndef NORMVOL_NORMVOL_H
#define NORMVOL_NORMVOL_H

#include <stddef.h>
#include <stdint.h>

#if defined(NORMVOL_BUILDING_LIBRARY)
#define NV_API __attribute__((visibility("default")))
#else
#define NV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nv_status {
  NV_OK = 0,
  NV_ERR_INVALID_ARGUMENT = 1,
  NV_ERR_FLAT_INPUT = 2,
  NV_ERR_ZERO_VOLUME = 3,
  NV_ERR_POLAR_UNDEFINED = 4,
  NV_ERR_SINGULAR_MAP = 5,
  NV_ERR_NOT_SYMMETRIC = 6,
  NV_ERR_SOLVER_STALL = 7,
  NV_ERR_CERTIFICATE_FAILED = 8,
  NV_ERR_INVALID_FAMILY = 9,
  NV_ERR_PARSE = 10,
  NV_ERR_IO = 11,
  NV_ERR_UNSUPPORTED = 12,
  NV_ERR_INTERNAL = 100
} nv_status;

typedef enum nv_volume_kind {
  NV_BUSEMANN = 0,
  NV_HOLMES_THOMPSON = 1,
  NV_MASS = 2,
  NV_MASS_STAR = 3
} nv_volume_kind;

typedef enum nv_profile_kind {
  NV_PROFILE_VOLUME = 0,
  /* 1 / vol((C(t) - s)°) about the Santalo point. */
  NV_PROFILE_RECIPROCAL_POLAR = 1
} nv_profile_kind;

typedef struct nv_budget {
  uint64_t max_subsets;
  int32_t restarts;
  int32_t max_iters;
  uint64_t rng_seed;
} nv_budget;

typedef struct nv_body nv_body;

typedef void (*nv_row_sink)(const char* row, void* user);

NV_API const char* nv_version(void);
NV_API const char* nv_rng_algorithm(void);
NV_API const char* nv_status_name(nv_status status);
NV_API const char* nv_last_error(void);
NV_API void nv_string_free(char* s);
NV_API nv_budget nv_budget_default(void);
NV_API nv_status nv_parse_volume_kind(const char* tag, nv_volume_kind* out);

/* Bodies. kind: simplex, cross, cube, ngon (n vertices, radius),
 * symmetral, pair (n = dimension of the first simplex), radon-hexagon. */
NV_API nv_status nv_body_make(const char* kind, int dim, int n, double radius, nv_body** out);
NV_API nv_status nv_body_from_vertices(int dim, size_t count, const double* coords, nv_body** out);
NV_API nv_status nv_body_from_json(const char* json, nv_body** out);
NV_API nv_status nv_body_read(const char* path, nv_body** out);
NV_API nv_status nv_body_write(const nv_body* body, const char* path);
NV_API nv_status nv_body_to_json(const nv_body* body, char** out);
NV_API void nv_body_free(nv_body* body);
NV_API int nv_body_dim(const nv_body* body);
NV_API size_t nv_body_vertex_count(const nv_body* body);
/* Writes nv_body_dim(body) coordinates. */
NV_API nv_status nv_body_vertex(const nv_body* body, size_t index, double* out);
NV_API int nv_body_is_symmetric(const nv_body* body);
NV_API nv_status nv_body_volume(const nv_body* body, double* out);
NV_API nv_status nv_body_polar(const nv_body* body, nv_body** out);
NV_API nv_status nv_body_hash(const nv_body* body, char** out);
NV_API nv_status nv_body_linear_image(const nv_body* body, const double* row_major, nv_body** out);

/* Extremal objects; the JSON carries {"body", "value", "exact", "indices"}. */
NV_API nv_status nv_compute_qn(const nv_body* body, int n, const nv_budget* budget, char** json_out);
NV_API nv_status nv_compute_cross(const nv_body* body, const nv_budget* budget, char** json_out);
NV_API nv_status nv_compute_para(const nv_body* body, const nv_budget* budget, char** json_out);
/* {"point": [...], "polar_volume": v} */
NV_API nv_status nv_compute_santalo(const nv_body* body, const nv_budget* budget, char** json_out);
NV_API nv_status nv_compute_mu(const nv_body* body, int n, nv_volume_kind kind, const nv_budget* budget,
                               double* value, char** json_out);
NV_API nv_status nv_max_ngon_disk(int n, const nv_budget* budget, double* out);

/* Verification suites; json_out is an array of reports. */
NV_API nv_status nv_suite_names(char** json_out);
NV_API nv_status nv_verify_suite(const char* suite, double tol, const nv_budget* budget, int* all_pass,
                                 char** json_out);

/* Streams one CSV row per evaluated sample (header first) into `sink`. */
NV_API nv_status nv_search_conjecture(uint64_t samples, uint64_t seed, int k_min, int k_max,
                                      const nv_budget* budget, nv_row_sink sink, void* user,
                                      char** summary_json);

/* tol <= 0 picks the default for the kind (1e-8 volume, 1e-6 polar). */
NV_API nv_status nv_shadow_profile(const char* system_json, nv_profile_kind kind, double t_min, double t_max,
                                   int steps, double tol, const nv_budget* budget, int* pass, char** json_out);
NV_API nv_status nv_shadow_cascade(const char* input_json, double eps, int max_steps, char** json_out);

NV_API nv_status nv_svg_bodies(const nv_body* const* bodies, size_t count, char** svg_out);
NV_API nv_status nv_svg_profile(const double* xs, const double* ys, size_t count, const char* x_label,
                                const char* y_label, char** svg_out);

#ifdef __cplusplus
}
#endif

#endif
