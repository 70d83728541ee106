#ifndef FACTOR_REGIMES_H
#define FACTOR_REGIMES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FrStatus {
  FR_STATUS_OK = 0,
  FR_STATUS_NULL_POINTER = 1,
  FR_STATUS_INVALID_INPUT = 2,
  FR_STATUS_COMPUTATION = 3,
  FR_STATUS_PANIC = 4,
} FrStatus;

typedef enum FrFamily {
  FR_FAMILY_STUDENT_T = 0,
  FR_FAMILY_GAUSSIAN = 1,
} FrFamily;

/**
 * Opaque fitted model; regimes ordered calm to volatile.
 */
typedef struct FrFit FrFit;

/**
 * Opaque factor panel.
 */
typedef struct FrPanel FrPanel;

typedef struct FrFTest {
  size_t lag;
  double f_stat;
  double p_value;
  size_t n_obs;
  double r2_increment;
} FrFTest;

typedef struct FrMetrics {
  /**
   * Percent per year, geometric.
   */
  double annual_return;
  /**
   * Valid only when `has_sharpe` is nonzero.
   */
  double sharpe;
  int32_t has_sharpe;
  /**
   * Percent, at most 0.
   */
  double max_drawdown;
  size_t n_active_days;
} FrMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *fr_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void fr_string_free(char *s);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum FrStatus fr_log_gamma(double x, double *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum FrStatus fr_digamma(double x, double *out);

/**
 * Upper tail P(F > f) of the F(df1, df2) distribution.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum FrStatus fr_f_sf(double f, uint32_t df1, uint32_t df2, double *out);

/**
 * P(X >= k) for X ~ Binomial(n, p).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum FrStatus fr_binomial_tail(uint64_t k, uint64_t n, double p, double *out);

/**
 * Granger F test of `lag` lags of `source` on `target` over every day with
 * a full lag history.
 *
 * # Safety
 * `target` and `source` must point to `len` readable doubles; `out` must be
 * valid for writes.
 */
enum FrStatus fr_granger_f_test(const double *target,
                                const double *source,
                                size_t len,
                                size_t lag,
                                struct FrFTest *out);

/**
 * Annual return, Sharpe and maximum drawdown of daily percent returns.
 *
 * # Safety
 * `returns` must point to `len` readable doubles; `out` must be valid for writes.
 */
enum FrStatus fr_performance_metrics(const double *returns, size_t len, struct FrMetrics *out);

/**
 * Parses a canonical panel CSV (`date,<factors...>`).
 *
 * # Safety
 * `csv` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum FrStatus fr_panel_from_csv(const char *csv, struct FrPanel **out);

/**
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum FrStatus fr_panel_read(const char *path, struct FrPanel **out);

/**
 * # Safety
 * `panel` must be a live handle; `rows` and `factors` valid for writes.
 */
enum FrStatus fr_panel_shape(const struct FrPanel *panel, size_t *rows, size_t *factors);

/**
 * # Safety
 * `panel` must be null or a handle not yet freed.
 */
void fr_panel_free(struct FrPanel *panel);

/**
 * Fits a K-regime HMM with `restarts` seeded restarts and orders regimes by
 * volatility.
 *
 * # Safety
 * `panel` must be a live handle; `out` must be valid for writes.
 */
enum FrStatus fr_fit(const struct FrPanel *panel,
                     size_t k,
                     enum FrFamily family,
                     uint64_t seed,
                     size_t restarts,
                     struct FrFit **out);

/**
 * # Safety
 * `fit` must be a live handle; the out-pointers valid for writes.
 */
enum FrStatus fr_fit_summary(const struct FrFit *fit,
                             size_t *n_states,
                             double *loglik,
                             double *bic);

/**
 * Copies decoded labels into `labels`, which must hold `len` entries where
 * `len` equals the panel length.
 *
 * # Safety
 * `fit` must be a live handle; `labels` must be writable for `len` entries.
 */
enum FrStatus fr_fit_labels(const struct FrFit *fit, uint32_t *labels, size_t len);

/**
 * Model document as JSON; release with [`fr_string_free`].
 *
 * # Safety
 * `fit` must be a live handle; `out` must be valid for writes.
 */
enum FrStatus fr_fit_to_json(const struct FrFit *fit, char **out);

/**
 * # Safety
 * `fit` must be null or a handle not yet freed.
 */
void fr_fit_free(struct FrFit *fit);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FACTOR_REGIMES_H */
