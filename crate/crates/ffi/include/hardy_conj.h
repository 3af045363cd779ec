#ifndef HARDY_CONJ_H
#define HARDY_CONJ_H

/* Generated by cbindgen from crates/ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HcStatus {
  HC_STATUS_OK = 0,
  HC_STATUS_NULL_POINTER = 1,
  HC_STATUS_INVALID_ARGUMENT = 2,
  HC_STATUS_DIMENSION_MISMATCH = 3,
  HC_STATUS_NOT_UNIMODULAR = 4,
  HC_STATUS_NOT_UNITARY = 5,
  HC_STATUS_NOT_DIAGONAL = 6,
  HC_STATUS_SEQUENCE_TOO_SHORT = 7,
  HC_STATUS_PANIC = 99,
} HcStatus;

/**
 * Opaque conjugation handle.
 */
typedef struct HcConjugation HcConjugation;

/**
 * Opaque Laurent symbol handle.
 */
typedef struct HcSymbol HcSymbol;

typedef struct HcComplex {
  double re;
  double im;
} HcComplex;

/**
 * Axiom certificate, see `verify_conjugation`.
 */
typedef struct HcConjugationCert {
  double isometry_residual;
  double involution_residual;
  double a_unitarity_residual;
  double a_symmetry_residual;
  bool passed;
} HcConjugationCert;

typedef struct HcConditionCheck {
  bool holds;
  double max_violation;
} HcConditionCheck;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer stays
 * valid until the next `hc_*` call on the same thread.
 */
const char *hc_last_error(void);

/**
 * The canonical conjugation `J` on dimension `n`.
 */
enum HcStatus hc_conjugation_j(size_t n, struct HcConjugation **out);

/**
 * `C_λ` on dimension `n`; `λ` must be unimodular.
 */
enum HcStatus hc_conjugation_lambda(struct HcComplex lambda, size_t n, struct HcConjugation **out);

/**
 * `C_α` from `α_0..α_{len-1}`.
 */
enum HcStatus hc_conjugation_alpha(const struct HcComplex *alpha,
                                   size_t len,
                                   struct HcConjugation **out);

/**
 * `C_ζ` from `ζ_1..ζ_len`; the dimension is `len + 1`.
 */
enum HcStatus hc_conjugation_zeta(const struct HcComplex *zeta,
                                  size_t len,
                                  struct HcConjugation **out);

/**
 * `U*JU` for a row-major `n×n` unitary `U`.
 */
enum HcStatus hc_conjugation_from_unitary(const struct HcComplex *unitary,
                                          size_t n,
                                          struct HcConjugation **out);

/**
 * `U*JU` for the seeded random unitary of dimension `n`.
 */
enum HcStatus hc_conjugation_random_unitary(size_t n, uint64_t seed, struct HcConjugation **out);

/**
 * Dimension of the conjugation, or 0 for NULL.
 */
size_t hc_conjugation_dim(const struct HcConjugation *c);

/**
 * Writes `C f` into `output`; both arrays hold `len` entries, `len` must
 * equal the dimension.
 */
enum HcStatus hc_conjugation_apply(const struct HcConjugation *c,
                                   const struct HcComplex *input,
                                   size_t len,
                                   struct HcComplex *output);

/**
 * Copies the row-major A-factor into `output`, which must hold `len = n*n`
 * entries.
 */
enum HcStatus hc_conjugation_a_factor(const struct HcConjugation *c,
                                      struct HcComplex *output,
                                      size_t len);

enum HcStatus hc_conjugation_verify(const struct HcConjugation *c,
                                    size_t trials,
                                    double tol,
                                    uint64_t seed,
                                    struct HcConjugationCert *out);

void hc_conjugation_free(struct HcConjugation *c);

/**
 * Symbol of band `band` from `2*band + 1` coefficients `φ̂(-band)..φ̂(band)`.
 */
enum HcStatus hc_symbol_new(size_t band, const struct HcComplex *coeffs, struct HcSymbol **out);

void hc_symbol_free(struct HcSymbol *s);

/**
 * Frobenius norm of the leading `window×window` block of `A·conj(T) − T^H·A`
 * with `T` the section of `symbol` at the conjugation's dimension. A `window`
 * of 0 selects the truncation-free default.
 */
enum HcStatus hc_symmetry_residual(const struct HcConjugation *c,
                                   const struct HcSymbol *symbol,
                                   size_t window,
                                   double *out);

enum HcStatus hc_check_ko_lee(const struct HcSymbol *symbol,
                              struct HcComplex lambda,
                              double tol,
                              struct HcConditionCheck *out);

/**
 * One-sided `C_ζ` criterion with `ζ_1..ζ_len`.
 */
enum HcStatus hc_check_zeta_condition(const struct HcSymbol *symbol,
                                      const struct HcComplex *zeta,
                                      size_t len,
                                      double tol,
                                      struct HcConditionCheck *out);

/**
 * Two-index `C_ζ` criterion on the `n×n` section, `ζ_1..ζ_len` with
 * `len ≥ n - 1`.
 */
enum HcStatus hc_check_entrywise_condition(const struct HcSymbol *symbol,
                                           const struct HcComplex *zeta,
                                           size_t len,
                                           size_t n,
                                           double tol,
                                           struct HcConditionCheck *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HARDY_CONJ_H */
