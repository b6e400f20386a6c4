#ifndef RGAMMA_H
#define RGAMMA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RgStatus {
  RG_STATUS_OK = 0,
  RG_STATUS_NULL_POINTER = 1,
  RG_STATUS_INVALID_INPUT = 2,
  RG_STATUS_DOMAIN_ERROR = 3,
  RG_STATUS_INDEX_OUT_OF_RANGE = 4,
  RG_STATUS_ORACLE_DISAGREEMENT = 5,
  RG_STATUS_PANIC = 6,
} RgStatus;

// Opaque analysis of one numerical semigroup.
typedef struct RgAnalysis RgAnalysis;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds the analysis of `<gens[0], ..., gens[len-1]>` into `*out`.
//
// # Safety
// `gens` must point to `len` readable values and `out` must be writable.
enum RgStatus rg_analysis_new(const uint32_t *gens, size_t len, struct RgAnalysis **out);

// # Safety
// `a` must come from [`rg_analysis_new`] and not be used afterwards. Null is ignored.
void rg_analysis_free(struct RgAnalysis *a);

// # Safety
// `a` must be a live handle and `out` writable.
enum RgStatus rg_analysis_conductor(const struct RgAnalysis *a, uint32_t *out);

// Number of template variables, `M`.
//
// # Safety
// `a` must be a live handle and `out` writable.
enum RgStatus rg_analysis_ambient_dim(const struct RgAnalysis *a, size_t *out);

// Dimension after linear elimination. `*has_value` is false when equations
// remain that are not linear in any variable.
//
// # Safety
// `a` must be a live handle; `out` and `has_value` writable.
enum RgStatus rg_analysis_affine_dim(const struct RgAnalysis *a, size_t *out, bool *has_value);

// # Safety
// `a` must be a live handle and `out` writable.
enum RgStatus rg_analysis_equation_count(const struct RgAnalysis *a, size_t *out);

// The `index`-th defining equation as text; free with [`rg_string_free`].
//
// # Safety
// `a` must be a live handle and `out` writable.
enum RgStatus rg_analysis_equation(const struct RgAnalysis *a, size_t index, char **out);

// The full analysis report as JSON; free with [`rg_string_free`].
//
// # Safety
// `a` must be a live handle and `out` writable.
enum RgStatus rg_analysis_report_json(const struct RgAnalysis *a, char **out);

// Membership of a point given as `"b7=1,b9=1/2"` (unset variables are 0).
// With `use_oracle`, the brute-force closure must agree or
// `RG_STATUS_ORACLE_DISAGREEMENT` is returned.
//
// # Safety
// `a` must be a live handle, `point` a nul-terminated string, `in_variety` writable.
enum RgStatus rg_analysis_check_point(const struct RgAnalysis *a,
                                      const char *point,
                                      bool use_oracle,
                                      bool *in_variety);

// Message for the last failure on this thread; empty after a success.
// Valid until the next call into the library on this thread.
const char *rg_last_error_message(void);

// # Safety
// `s` must come from this library and not be used afterwards. Null is ignored.
void rg_string_free(char *s);

// Library version, static storage.
const char *rg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RGAMMA_H */
