/* C interface to the hqgeo library. All functions return an hqgeo_status;
 * on failure hqgeo_last_error() describes the problem (per thread). Strings
 * returned through char** are owned by the caller and released with
 * hqgeo_string_free. */
#ifndef HQGEO_H
#define HQGEO_H

#include <stddef.h>
#include <stdint.h>

#if defined(HQGEO_BUILDING_LIBRARY)
#define HQGEO_API __attribute__((visibility("default")))
#else
#define HQGEO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HQGEO_OK = 0,
  HQGEO_ERR_DOMAIN = 1,
  HQGEO_ERR_PARAMETER = 2,
  HQGEO_ERR_INPUT = 3,
  HQGEO_ERR_OUT_OF_RANGE = 4,
  HQGEO_ERR_EVALUATION = 5,
  HQGEO_ERR_INTERNAL = 6,
  HQGEO_ERR_NULL_ARG = 7
} hqgeo_status;

typedef enum { HQGEO_CORRECTED = 0, HQGEO_AS_PUBLISHED = 1 } hqgeo_convention;

typedef enum { HQGEO_FORMAT_CSV = 0, HQGEO_FORMAT_JSON = 1, HQGEO_FORMAT_TABLE = 2 } hqgeo_format;

/* (x1, x2, x3, x4; t1, t2, t3) */
typedef struct {
  double x[4];
  double t[3];
} hqgeo_point;

typedef struct hqgeo_curve hqgeo_curve;
typedef struct hqgeo_pointset hqgeo_pointset;
typedef struct hqgeo_surface hqgeo_surface;

HQGEO_API const char* hqgeo_version(void);
HQGEO_API const char* hqgeo_last_error(void);
HQGEO_API const char* hqgeo_status_name(hqgeo_status s);
HQGEO_API void hqgeo_string_free(char* s);

/* group */
HQGEO_API hqgeo_status hqgeo_compose(const hqgeo_point* a, const hqgeo_point* b, hqgeo_point* out);
HQGEO_API hqgeo_status hqgeo_invert(const hqgeo_point* p, hqgeo_point* out);
HQGEO_API hqgeo_status hqgeo_koranyi_gauge(const hqgeo_point* p, double* out);
HQGEO_API hqgeo_status hqgeo_koranyi_distance(const hqgeo_point* a, const hqgeo_point* b, double* out);

/* CC metric */
HQGEO_API hqgeo_status hqgeo_cc_distance(const hqgeo_point* a, const hqgeo_point* b, hqgeo_convention conv,
                                         double* out);
HQGEO_API hqgeo_status hqgeo_comparison_ratio(const hqgeo_point* p, hqgeo_convention conv, double* out);
HQGEO_API hqgeo_status hqgeo_x0_solve(double ratio, hqgeo_convention conv, double* out);

/* curves */
HQGEO_API hqgeo_status hqgeo_path_connect(const hqgeo_point* from, const hqgeo_point* to, int intervals,
                                          hqgeo_curve** out);
HQGEO_API hqgeo_status hqgeo_cc_geodesic(const hqgeo_point* target, int intervals, hqgeo_convention conv,
                                         hqgeo_curve** out);
/* g_L geodesic from the origin, symmetric L */
HQGEO_API hqgeo_status hqgeo_gl_geodesic(const hqgeo_point* target, double L, int intervals, hqgeo_convention conv,
                                         hqgeo_curve** out);
HQGEO_API size_t hqgeo_curve_sample_count(const hqgeo_curve* c);
HQGEO_API hqgeo_status hqgeo_curve_sample(const hqgeo_curve* c, size_t index, double* lambda, hqgeo_point* point);
HQGEO_API hqgeo_status hqgeo_curve_length_cc(const hqgeo_curve* c, double* out);
HQGEO_API hqgeo_status hqgeo_curve_residual(const hqgeo_curve* c, double* out);
HQGEO_API hqgeo_status hqgeo_curve_serialize(const hqgeo_curve* c, hqgeo_format fmt, char** out);
HQGEO_API void hqgeo_curve_free(hqgeo_curve* c);

/* spheres; metric is "cc" or "koranyi" */
HQGEO_API hqgeo_status hqgeo_sphere_sample(const char* metric, double radius, size_t n, uint64_t seed,
                                           hqgeo_convention conv, hqgeo_pointset** out);
HQGEO_API size_t hqgeo_pointset_size(const hqgeo_pointset* s);
HQGEO_API hqgeo_status hqgeo_pointset_get(const hqgeo_pointset* s, size_t index, hqgeo_point* out);
HQGEO_API hqgeo_status hqgeo_pointset_serialize(const hqgeo_pointset* s, hqgeo_format fmt, char** out);
HQGEO_API void hqgeo_pointset_free(hqgeo_pointset* s);

/* curvature report of g_L as JSON */
HQGEO_API hqgeo_status hqgeo_curvature_report_json(double l1, double l2, double l3, char** out);

/* surfaces from the built-in catalog; params like "R=1" or "" */
HQGEO_API hqgeo_status hqgeo_surface_create(const char* name, const char* params, hqgeo_convention conv,
                                            hqgeo_surface** out);
HQGEO_API hqgeo_status hqgeo_surface_hmc_at_radius(const hqgeo_surface* s, double r, double* out);
HQGEO_API hqgeo_status hqgeo_surface_hmc_at_point(const hqgeo_surface* s, const hqgeo_point* p, double* out);
HQGEO_API hqgeo_status hqgeo_surface_is_characteristic(const hqgeo_surface* s, const hqgeo_point* p, int* out);
/* H0 over r values; includes the closed-form reference and the profile formula where known */
HQGEO_API hqgeo_status hqgeo_surface_hmc_grid(const hqgeo_surface* s, const double* r, size_t n, hqgeo_format fmt,
                                              char** out);
HQGEO_API void hqgeo_surface_free(hqgeo_surface* s);

/* invariant suites; failures receives the number of failing checks */
HQGEO_API hqgeo_status hqgeo_verify(const char* suite, uint64_t seed, hqgeo_format fmt, char** out, int* failures);

#ifdef __cplusplus
}
#endif

#endif
