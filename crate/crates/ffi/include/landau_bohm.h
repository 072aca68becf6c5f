#ifndef LANDAU_BOHM_H
#define LANDAU_BOHM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum LbStatus {
  LB_STATUS_OK = 0,
  LB_STATUS_NULL_POINTER = 1,
  LB_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Input lies on a singular point or outside the domain of a closed form.
   */
  LB_STATUS_DOMAIN = 3,
  /**
   * A series, quadrature or integrator did not converge.
   */
  LB_STATUS_NUMERICAL = 4,
  LB_STATUS_BUFFER_TOO_SMALL = 5,
  LB_STATUS_PANIC = 6,
} LbStatus;

typedef enum LbModel {
  LB_MODEL_QM = 0,
  LB_MODEL_EL = 1,
  LB_MODEL_CBR = 2,
} LbModel;

typedef enum LbSuite {
  LB_SUITE_EP = 0,
  LB_SUITE_FLUX = 1,
  LB_SUITE_REGULAR = 2,
  LB_SUITE_SPECTRUM = 3,
  LB_SUITE_ALL = 4,
} LbSuite;

/**
 * Physical constants (hbar, mass, charge, field).
 */
typedef struct LbParams LbParams;

/**
 * Outcome of a verification run.
 */
typedef struct LbVerifyReport LbVerifyReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *lb_version(void);

/**
 * Message of the last failed call on this thread (empty after a success).
 */
enum LbStatus lb_last_error_message(char *buf, size_t len, size_t *needed);

enum LbStatus lb_params_new(double hbar,
                            double mass,
                            double charge,
                            double field,
                            struct LbParams **params);

void lb_params_free(struct LbParams *params);

/**
 * Energy of the state (n_r, l, k_z) under `model`.
 */
enum LbStatus lb_energy(const struct LbParams *params,
                        enum LbModel model,
                        int n_r,
                        int l,
                        double k_z,
                        double *energy);

enum LbStatus lb_degeneracy_splitting(const struct LbParams *params, int l, double *splitting);

/**
 * Langer-regularised radial amplitude at `r`.
 */
enum LbStatus lb_radial_regularised(const struct LbParams *params,
                                    int n_r,
                                    int l,
                                    double r,
                                    double *value);

/**
 * `sqrt(z) J_{1/sqrt 2}(k_z z)`.
 */
enum LbStatus lb_axial_regularised(double k_z, double z, double *value);

/**
 * Complex Whittaker azimuthal amplitude `c1 M + c2 W` at `theta`.
 */
enum LbStatus lb_azimuthal_whittaker(double theta,
                                     int l,
                                     double phi,
                                     double c1_re,
                                     double c1_im,
                                     double c2_re,
                                     double c2_im,
                                     double *value_re,
                                     double *value_im);

/**
 * Real local azimuthal branch with amplitude constant `a_theta`.
 */
enum LbStatus lb_theta_local_branch(double theta,
                                    double a_theta,
                                    double phi,
                                    double kappa,
                                    double *value);

/**
 * Closed-form azimuthal momentum for separation constant `lambda`.
 */
enum LbStatus lb_pi_theta(double lambda,
                          double phi,
                          double r,
                          double hbar,
                          double e_pi,
                          double theta0,
                          double theta,
                          double *value);

/**
 * Runs a verification suite. `tol <= 0` keeps the built-in tolerances.
 */
enum LbStatus lb_verify_run(enum LbSuite suite, double tol, struct LbVerifyReport **report);

enum LbStatus lb_verify_passed(const struct LbVerifyReport *report, bool *passed);

enum LbStatus lb_verify_check_count(const struct LbVerifyReport *report, size_t *count);

/**
 * Worst residual and pass flag of the check called `name`.
 */
enum LbStatus lb_verify_check(const struct LbVerifyReport *report,
                              const char *name,
                              double *max_residual,
                              bool *passed);

/**
 * The report as JSON, with the same buffer protocol as [`lb_last_error_message`].
 */
enum LbStatus lb_verify_json(const struct LbVerifyReport *report,
                             char *buf,
                             size_t len,
                             size_t *needed);

void lb_verify_free(struct LbVerifyReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LANDAU_BOHM_H */
