/*
 * sfrope — thick ("rope-like") curves on the unit sphere.
 *
 * C interface to the sfrope core: construction of the maximal-length closed
 * and open solution curves at their quantized thickness values, thickness
 * measurement of arbitrary sampled spherical curves, and verification of the
 * sphere-filling, forbidden-ball, tube-area, and component-count laws.
 *
 * Conventions:
 *   - every function returns an sfr_status; 0 (SFR_OK) means success,
 *   - results are written through out-parameters,
 *   - objects are opaque handles released with their sfr_*_free function,
 *   - sfr_error_message() describes the most recent failure on this thread.
 */

#ifndef SFROPE_H
#define SFROPE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sfr_status {
    SFR_OK = 0,
    SFR_ERROR_IO = 1,
    SFR_ERROR_NOT_COPRIME = 2,
    SFR_ERROR_INVALID_ARGUMENT = 3,
    SFR_ERROR_PARSE = 4,
    SFR_ERROR_CONSTRUCTION = 5,
    SFR_ERROR_DEGENERATE = 6,
    SFR_ERROR_INTERNAL = 7
} sfr_status;

/* An exact piecewise-circular curve on the unit sphere. */
typedef struct sfr_curve sfr_curve;
/* An ordered point sampling of a curve. */
typedef struct sfr_samples sfr_samples;
/* A rotation-invariant congruence fingerprint. */
typedef struct sfr_fingerprint sfr_fingerprint;

/* Message for the most recent error on the calling thread. */
const char* sfr_error_message(void);

/* ------------------------------------------------------------------ */
/* construction                                                       */

/* Closed solution for (n, k), gcd(n, k) = 1: 2n semicircular arcs with
 * thickness sin(pi/(2n)). On SFR_ERROR_NOT_COPRIME, *components_out (when
 * non-NULL) receives the number of components the seam permutation yields. */
sfr_status sfr_generate_closed(int n, int k, sfr_curve** out, int* components_out);

/* Open solution with thickness sin(pi/n); validated against its gates. */
sfr_status sfr_generate_open(int n, int k, sfr_curve** out);

void sfr_curve_free(sfr_curve* c);

/* ------------------------------------------------------------------ */
/* curve inspection                                                   */

sfr_status sfr_curve_arc_count(const sfr_curve* c, size_t* out);
sfr_status sfr_curve_is_closed(const sfr_curve* c, int* out);
sfr_status sfr_curve_length(const sfr_curve* c, double* out);

/* family: 0 = none/unknown, 1 = closed family, 2 = open family. */
sfr_status sfr_curve_meta(const sfr_curve* c, int* family, int* n, int* k);

/* Endpoint classification: 0 = closed curve, 1 = antipodal endpoints,
 * 2 = non-antipodal; *distance receives the endpoint geodesic distance. */
sfr_status sfr_curve_endpoint_geometry(const sfr_curve* c, int* kind, double* distance);

/* C1-junction / simplicity / closure report. Each out-pointer may be NULL. */
sfr_status sfr_curve_check_c1_simplicity(const sfr_curve* c, size_t samples_per_arc,
                                         int* pass, double* max_tangent_mismatch,
                                         double* min_nonadjacent_separation);

/* ------------------------------------------------------------------ */
/* serialization                                                      */

sfr_status sfr_curve_save_json(const sfr_curve* c, const char* path);
sfr_status sfr_curve_load_json(const char* path, sfr_curve** out);
sfr_status sfr_curve_export_obj(const sfr_curve* c, const char* path, size_t samples_per_arc);
sfr_status sfr_curve_export_ply(const sfr_curve* c, const char* path, size_t samples_per_arc);
sfr_status sfr_curve_export_svg(const sfr_curve* c, const char* path);

/* ------------------------------------------------------------------ */
/* sampling and measurement                                           */

/* Sample `total` points uniformly in arc length along the curve. */
sfr_status sfr_curve_sample(const sfr_curve* c, size_t total, sfr_samples** out);
/* Sample a fixed number of points on every arc. */
sfr_status sfr_curve_sample_per_arc(const sfr_curve* c, size_t per_arc, sfr_samples** out);
/* Wrap caller-provided unit points (x0,y0,z0,x1,...), 3*count doubles. */
sfr_status sfr_samples_create(const double* xyz, size_t count, int closed, sfr_samples** out);

sfr_status sfr_samples_count(const sfr_samples* s, size_t* out);
sfr_status sfr_samples_get(const sfr_samples* s, size_t index, double* x, double* y, double* z);
void sfr_samples_free(sfr_samples* s);

typedef struct sfr_thickness_report {
    double delta;           /* minimum circumradius over sample triples */
    double spherical_theta; /* arcsin(delta) */
    size_t witness[3];      /* lexicographically smallest attaining triple */
} sfr_thickness_report;

typedef enum sfr_engine { SFR_ENGINE_BRUTEFORCE = 0, SFR_ENGINE_ACCELERATED = 1 } sfr_engine;

/* Thickness of a sampled curve. The two engines return identical results;
 * the accelerated one prunes triples that cannot attain the minimum. */
sfr_status sfr_thickness(const sfr_samples* s, sfr_engine engine, sfr_thickness_report* out);

typedef struct sfr_fgb_report {
    int pass;
    double worst_clearance; /* min over tangent balls of (distance - theta) */
    size_t worst_sample;
    int worst_side;
    size_t worst_violator;
} sfr_fgb_report;

/* Forbidden-geodesic-ball check at intrinsic radius theta. */
sfr_status sfr_fgb_check(const sfr_samples* s, double theta, double tolerance,
                         sfr_fgb_report* out);

typedef struct sfr_coverage_report {
    double theta;
    size_t grid_size;
    double max_gap;
    double covered_fraction;
    double tube_area_estimate;
    double curve_length;
    int sphere_filling;
} sfr_coverage_report;

/* Coverage against a deterministic spiral grid of `grid_size` points. */
sfr_status sfr_coverage(const sfr_samples* s, double theta, size_t grid_size,
                        double tolerance, sfr_coverage_report* out);

/* Monte Carlo tube-area law check (closed curves): area vs 2 sin(theta) L. */
sfr_status sfr_tube_area_check(const sfr_samples* s, double theta, size_t mc_points,
                               uint64_t seed, double* area_estimate, double* law_value,
                               double* relative_error);

/* ------------------------------------------------------------------ */
/* enumeration and congruence                                         */

/* Euler totient of n (trial gcd scan). */
sfr_status sfr_totient(int n, int* out);

/* Admissible k for the closed family: all k in [0, n) with gcd(n, k) = 1.
 * Writes at most capacity entries; *count receives the full number. */
sfr_status sfr_admissible_k(int n, int* buffer, size_t capacity, size_t* count);

/* Number of closed components produced by seam parameters (n, k). */
sfr_status sfr_seam_components(int n, int k, int* out);

/* Closed family: 2 pi / sin(pi/(2n)); open family: arc-length sum. */
sfr_status sfr_analytic_length(int family_is_open, int n, double* out);

sfr_status sfr_fingerprint_compute(const sfr_curve* c, sfr_fingerprint** out);
sfr_status sfr_fingerprint_equal(const sfr_fingerprint* a, const sfr_fingerprint* b, int* out);
void sfr_fingerprint_free(sfr_fingerprint* f);

#ifdef __cplusplus
}
#endif

#endif /* SFROPE_H */
