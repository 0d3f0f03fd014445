#ifndef MEDIA_ACCOUNTABILITY_H
#define MEDIA_ACCOUNTABILITY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MaStatus {
  MA_STATUS_OK = 0,
  MA_STATUS_NULL_POINTER = 1,
  MA_STATUS_OUT_OF_RANGE = 2,
  MA_STATUS_NON_FINITE = 3,
  MA_STATUS_INVALID_COUNT = 4,
  MA_STATUS_UNREACHABLE_CONDITIONING = 5,
  MA_STATUS_INVALID_ARGUMENT = 6,
  MA_STATUS_BUFFER_TOO_SMALL = 7,
  MA_STATUS_PANIC = 8,
} MaStatus;

typedef enum MaField {
  MA_FIELD_SIGMA = 0,
  MA_FIELD_PI = 1,
  MA_FIELD_Q = 2,
  MA_FIELD_K = 3,
  MA_FIELD_S = 4,
  MA_FIELD_UC = 5,
  MA_FIELD_PHI = 6,
} MaField;

typedef enum MaConditioning {
  MA_CONDITIONING_CONSISTENT_ANY = 0,
  MA_CONDITIONING_INCONSISTENT = 1,
  MA_CONDITIONING_CONSISTENT_NS = 2,
  MA_CONDITIONING_CONSISTENT_S = 3,
  MA_CONDITIONING_ALT_ONLY_S = 4,
  MA_CONDITIONING_ALT_ONLY_NS = 5,
} MaConditioning;

typedef enum MaRegime {
  MA_REGIME_ACCOUNTABILITY_LISTEN_BOTH = 0,
  MA_REGIME_ACCOUNTABILITY_MAINSTREAM_ONLY = 1,
  MA_REGIME_NO_ACCOUNTABILITY_SELECT_ON_ALT = 2,
  MA_REGIME_NO_ACCOUNTABILITY_RETAIN_ALWAYS = 3,
  MA_REGIME_NO_ACCOUNTABILITY_REMOVE_ALWAYS = 4,
} MaRegime;

/**
 * Opaque validated parameter set.
 */
typedef struct MaParams MaParams;

/**
 * Opaque result of a one-parameter sweep.
 */
typedef struct MaSweep MaSweep;

typedef struct MaThresholds {
  double phi_e;
  double phi_v;
  double phi_a;
  double phi_a_consistent;
  double phi_e_clamped;
  double phi_v_clamped;
  double phi_a_clamped;
  double phi_a_consistent_clamped;
  double u_lo;
  double u_hi;
  double u_hi2;
} MaThresholds;

typedef struct MaPosterior {
  double p_high;
  double p_low;
  double p_subversive;
} MaPosterior;

/**
 * Strategy profile as plain data. Bit `i` of `retain_mask` means the
 * voter retains on observation class `i`, ordered
 * agree/NS, agree/S, disagree/NS, disagree/S.
 */
typedef struct MaProfile {
  bool high_effort;
  uint8_t retain_mask;
} MaProfile;

typedef struct MaObservationClass {
  bool agree;
  bool alt_subversive;
} MaObservationClass;

typedef struct MaVerifyResult {
  bool is_equilibrium;
  /**
   * Bit `i` set if the voter gains by deviating at class `i`.
   */
  uint8_t voter_deviation_mask;
  bool incumbent_deviates;
  /**
   * Net gain of the high type's profitable deviation, 0 when none.
   */
  double incumbent_net_gain;
  /**
   * Bit `i` set if class `i` has probability zero.
   */
  uint8_t offpath_mask;
  double policy_payoff_gap;
} MaVerifyResult;

typedef struct MaMetrics {
  double p_high_retained;
  double p_low_retained;
  double p_subversive_retained;
  double expected_voter_welfare;
  uint64_t n_replications;
  uint64_t seed;
  /**
   * Indexed like `MaProfile::retain_mask` bits; valid where `class_observed` is set.
   */
  struct MaPosterior posteriors[4];
  bool class_observed[4];
} MaMetrics;

typedef struct MaSweepRow {
  double value;
  enum MaRegime regime;
  struct MaProfile profile;
  struct MaThresholds thresholds;
  double p_high_retained;
  double p_low_retained;
  double p_subversive_retained;
  double expected_voter_welfare;
} MaSweepRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never NULL.
 */
const char *ma_status_message(enum MaStatus status);

/**
 * Copies the calling thread's last error message into `buf` (NUL
 * terminated, truncated to `len`). Returns the length the full message
 * needs including the terminator. `buf` may be NULL to query the length.
 */
size_t ma_last_error_message(char *buf, size_t len);

/**
 * Validates the seven primitives and allocates a parameter handle.
 */
enum MaStatus ma_params_new(double sigma,
                            double pi,
                            double q,
                            double k,
                            double s,
                            double u_c,
                            double phi,
                            struct MaParams **out);

/**
 * Copy of `params` with one field replaced, as a new handle.
 */
enum MaStatus ma_params_with(const struct MaParams *params,
                             enum MaField field,
                             double value,
                             struct MaParams **out);

void ma_params_free(struct MaParams *params);

enum MaStatus ma_params_get(const struct MaParams *params, enum MaField field, double *out);

enum MaStatus ma_thresholds(const struct MaParams *params, struct MaThresholds *out);

enum MaStatus ma_listens_to_alt(const struct MaParams *params, bool *out);

enum MaStatus ma_effort_sustainable(const struct MaParams *params,
                                    bool requires_alt_clearance,
                                    bool *out);

enum MaStatus ma_posterior(const struct MaParams *params,
                           enum MaConditioning cond,
                           struct MaPosterior *out);

enum MaStatus ma_retention_utility(const struct MaParams *params,
                                   enum MaConditioning cond,
                                   double *out);

enum MaStatus ma_mainstream_trust(double sigma, double phi, double *out);

/**
 * Either out-pointer may be NULL if that result is not wanted.
 */
enum MaStatus ma_classify(const struct MaParams *params,
                          enum MaRegime *out_regime,
                          struct MaProfile *out_profile);

/**
 * Static regime name, e.g. "AccountabilityListenBoth". Never NULL.
 */
const char *ma_regime_name(enum MaRegime regime);

enum MaStatus ma_profile_from_index(uint32_t index, struct MaProfile *out);

/**
 * Enumeration index 0..32 of a profile, or -1 if `retain_mask` is invalid.
 */
int32_t ma_profile_index(struct MaProfile profile);

enum MaStatus ma_observation_probability(const struct MaParams *params,
                                         struct MaProfile profile,
                                         struct MaObservationClass class_,
                                         double *out);

enum MaStatus ma_is_pbe(const struct MaParams *params,
                        struct MaProfile profile,
                        struct MaVerifyResult *out);

/**
 * Writes every equilibrium profile (index order) into `out[0..capacity]`
 * and their number into `out_count`. Returns `MA_STATUS_BUFFER_TOO_SMALL`
 * when `capacity` is below the count; 32 always suffices.
 */
enum MaStatus ma_find_equilibria(const struct MaParams *params,
                                 struct MaProfile *out,
                                 size_t capacity,
                                 size_t *out_count);

enum MaStatus ma_simulate(const struct MaParams *params,
                          struct MaProfile profile,
                          uint64_t n,
                          uint64_t seed,
                          struct MaMetrics *out);

enum MaStatus ma_theoretical_metrics(const struct MaParams *params,
                                     struct MaProfile profile,
                                     struct MaMetrics *out);

/**
 * Classifies `steps` evenly spaced values of `field` from `from` to `to`.
 */
enum MaStatus ma_sweep_new(const struct MaParams *params,
                           enum MaField field,
                           double from,
                           double to,
                           size_t steps,
                           struct MaSweep **out);

/**
 * Number of grid points; 0 for NULL.
 */
size_t ma_sweep_len(const struct MaSweep *sweep);

enum MaStatus ma_sweep_row(const struct MaSweep *sweep, size_t index, struct MaSweepRow *out);

/**
 * Number of regime changes along the grid; 0 for NULL.
 */
size_t ma_sweep_transition_count(const struct MaSweep *sweep);

/**
 * Row index of the first grid point after the `index`-th regime change.
 */
enum MaStatus ma_sweep_transition(const struct MaSweep *sweep, size_t index, size_t *out_row);

void ma_sweep_free(struct MaSweep *sweep);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MEDIA_ACCOUNTABILITY_H */
