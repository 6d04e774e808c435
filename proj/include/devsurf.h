/* C interface to the developable-surface toolkit.
 *
 * All functions return ds_status; DS_OK is 0. On failure the thread-local
 * message from ds_last_error() describes the cause. Strings returned
 * through char** are heap-allocated and must be released with
 * ds_string_free. Handles are opaque and must be released with their
 * matching *_free function. */

#ifndef DEVSURF_H
#define DEVSURF_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ds_status {
  DS_OK = 0,
  DS_ERR_PARSE = 1,    /* malformed spec or expression */
  DS_ERR_DOMAIN = 2,   /* input outside the defined domain */
  DS_ERR_SINGULAR = 3, /* geometric degeneracy (vanishing differentials) */
  DS_ERR_IO = 4,       /* serialization failure */
  DS_ERR_INVALID = 5,  /* null handle or bad argument */
  DS_ERR_INTERNAL = 6
} ds_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* ds_last_error(void);

void ds_string_free(char* s);

/* ---- curves ---------------------------------------------------------- */

typedef struct ds_curve ds_curve;

/* Parses a JSON curve-spec document (families: helix, expressions,
 * sampled, angles). */
ds_status ds_curve_from_json(const char* json, ds_curve** out);
void ds_curve_free(ds_curve* curve);

/* ---- tangent developable -------------------------------------------- */

/* Wavefront OBJ of the tangent-developable mesh, ntau x ns vertices over
 * s in [smin, smax], smin > 0. */
ds_status ds_surface_obj(const ds_curve* curve, int ntau, int ns, double smin,
                         double smax, char** out_obj);

/* ---- development (unfolding) ----------------------------------------- */

/* SVG of the developed directrix with rulings of length s_len drawn every
 * ruling_stride samples. */
ds_status ds_unfold_svg(const ds_curve* curve, int samples, int ruling_stride,
                        double s_len, char** out_svg);

/* CSV with columns tau, zeta, theta, omega, pd, qd, sigma. */
ds_status ds_unfold_csv(const ds_curve* curve, int samples, char** out_csv);

/* JSON verification report: elementary-triangle isometry between the 3D
 * surface and its development (probe step h over s in [0.5, 2]).
 * *out_pass is 1 when every entry passes. */
ds_status ds_unfold_report(const ds_curve* curve, int samples, double h,
                           double tolerance, uint64_t seed, char** out_json,
                           int* out_pass);

/* ---- flattening-frame conditions ------------------------------------- */

/* JSON report on the six flattening functions: unit/orthogonality
 * residuals, the differential reconstruction mismatch at probe step h,
 * and the tangent-rotation relation. */
ds_status ds_sextet_report(const ds_curve* curve, int samples, double h,
                           double tolerance, char** out_json, int* out_pass);

/* ---- two-profile (shadow) surfaces ----------------------------------- */

/* Both sections are JSON section-spec documents sharing one phi grid;
 * gap is the axial distance between their planes. */
ds_status ds_shadow_obj(const char* section_a_json, const char* section_b_json,
                        double gap, int nx, char** out_obj);

/* JSON: {"kind": "cylinder"|"cone"|"general", "apex": [x,y,z],
 * "angular_spread": ..., "apex_rms": ...}. */
ds_status ds_shadow_classify(const char* section_a_json, const char* section_b_json,
                             double gap, char** out_json);

/* ---- implicit-surface verification ----------------------------------- */

/* Gaussian-curvature check of the built-in quartic developable example on
 * parametrically generated on-surface points. */
ds_status ds_verify_implicit(int samples, double h, double tolerance,
                             char** out_json, int* out_pass);

/* ---- acceptance suite ------------------------------------------------ */

/* Runs all acceptance criteria. out_log receives the PASS/FAIL lines,
 * out_json the full report; either may be NULL. */
ds_status ds_selftest(uint64_t seed, char** out_log, char** out_json, int* out_pass);

#ifdef __cplusplus
}
#endif

#endif
