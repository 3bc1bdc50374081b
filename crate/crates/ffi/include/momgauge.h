#ifndef MOMGAUGE_H
#define MOMGAUGE_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MgStatus {
  MG_STATUS_OK = 0,
  MG_STATUS_NULL_POINTER = 1,
  MG_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A gauge potential was evaluated on its singular set.
   */
  MG_STATUS_SINGULAR = 3,
  /**
   * Eigensolver or other numerical failure.
   */
  MG_STATUS_NUMERICAL = 4,
  /**
   * The Hamiltonian has no ground state.
   */
  MG_STATUS_UNBOUNDED_SPECTRUM = 5,
  /**
   * An output buffer is too small; the required size was still written.
   */
  MG_STATUS_BUFFER_TOO_SMALL = 6,
  MG_STATUS_PANIC = 7,
} MgStatus;

/**
 * Fock basis of the truncated Hamiltonian.
 */
typedef enum MgReference {
  /**
   * Ladder operators of the bare `(m, ω)` oscillator.
   */
  MG_REFERENCE_BARE = 0,
  /**
   * Ladder operators of `(m_eff, ω_eff)`.
   */
  MG_REFERENCE_EFFECTIVE = 1,
} MgReference;

/**
 * Sheet kinds accepted by [`mg_solve_sheets`].
 */
typedef enum MgSheetKind {
  MG_SHEET_KIND_CHARGE = 0,
  MG_SHEET_KIND_CURRENT_Y = 1,
} MgSheetKind;

/**
 * Opaque: a momentum gauge configuration.
 */
typedef struct MgGaugeConfig MgGaugeConfig;

/**
 * Opaque: a momentum grid.
 */
typedef struct MgGrid MgGrid;

/**
 * Opaque: the eigenvalues of a Fock-basis Hamiltonian.
 */
typedef struct MgSpectrum MgSpectrum;

/**
 * Oscillator inputs; `b` is the ordinary field, `bm` the momentum field.
 */
typedef struct MgParams {
  double m;
  double omega;
  double e;
  double g;
  double b;
  double bm;
  double hbar;
} MgParams;

typedef struct MgEffective {
  double g1;
  double g2;
  double kinetic_factor;
  double potential_factor;
  double m_eff;
  double omega_eff;
  double lz_coupling;
  /**
   * Zero when both couplings vanish; the four fields below are then NaN.
   */
  int32_t has_mixing;
  double b_eff;
  double b_nc;
  double cos_theta;
  double sin_theta;
} MgEffective;

typedef struct MgLevel {
  uint32_t n_r;
  int32_t m_z;
  double energy;
} MgLevel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the calling thread's last error message (NUL-terminated, possibly
 * truncated) into `buf` and returns the full message length without the NUL.
 * The message is empty after a successful call.
 */
size_t mg_last_error_message(char *buf, size_t cap);

/**
 * Static NUL-terminated version string.
 */
const char *mg_version(void);

/**
 * `m = ω = ħ = 1`, no fields.
 */
struct MgParams mg_params_default(void);

enum MgStatus mg_effective_params(const struct MgParams *params, struct MgEffective *out);

/**
 * The lowest `count` closed-form levels, ascending.
 */
enum MgStatus mg_analytic_levels(const struct MgParams *params, size_t count, struct MgLevel *out);

/**
 * Assembles and diagonalizes the Hamiltonian with `n_max` quanta per mode.
 */
enum MgStatus mg_spectrum_fock(const struct MgParams *params,
                               size_t n_max,
                               enum MgReference reference,
                               struct MgSpectrum **out);

/**
 * Number of eigenvalues (the basis dimension); 0 for NULL.
 */
size_t mg_spectrum_len(const struct MgSpectrum *spectrum);

/**
 * Leading eigenvalues unaffected by truncation; 0 for NULL.
 */
size_t mg_spectrum_trusted_count(const struct MgSpectrum *spectrum);

/**
 * Copies all eigenvalues, ascending. `*len` receives the count even when
 * the buffer is too small.
 */
enum MgStatus mg_spectrum_eigenvalues(const struct MgSpectrum *spectrum,
                                      double *out,
                                      size_t cap,
                                      size_t *len);

void mg_spectrum_free(struct MgSpectrum *spectrum);

/**
 * Trusted-level discrepancy between `H(eB = a, g𝓑 = b)` and
 * `H(eB = -b, g𝓑 = -a)`.
 */
enum MgStatus mg_reciprocity_check(double a,
                                   double b,
                                   size_t n_max,
                                   size_t *compared,
                                   double *max_discrepancy);

/**
 * Parses `{"variant": ..., "params": {...}}`.
 */
enum MgStatus mg_gauge_config_from_json(const char *json, struct MgGaugeConfig **out);

void mg_gauge_config_free(struct MgGaugeConfig *config);

/**
 * `G_μν(p)` with lower indices, row-major into `out[16]`.
 */
enum MgStatus mg_field_strength(const struct MgGaugeConfig *config, const double *p, double *out);

/**
 * Square grid with `points` nodes per axis on `[-half_extent, half_extent]`.
 */
enum MgStatus mg_grid_new(size_t dims, size_t points, double half_extent, struct MgGrid **out);

/**
 * Total node count; 0 for NULL.
 */
size_t mg_grid_len(const struct MgGrid *grid);

void mg_grid_free(struct MgGrid *grid);

/**
 * Checks `[X_i, X_j] = iħgG_ij` on Gaussian states. `centers` holds
 * `n_states × dims` coordinates and `widths` one width per state. Writes
 * the largest relative residual and, when `theta` is not NULL, the mean
 * `Θ_ij` of every ordered axis pair into `theta[i * dims + j]`
 * (`dims × dims` entries, zero diagonal).
 */
enum MgStatus mg_noncommutativity(const struct MgGrid *grid,
                                  const struct MgGaugeConfig *config,
                                  double g,
                                  double hbar,
                                  const double *centers,
                                  const double *widths,
                                  size_t n_states,
                                  double *max_residual,
                                  double *theta);

/**
 * Outward flux of the momentum Coulomb field through `|p| = radius`.
 */
enum MgStatus mg_coulomb_flux(double gc, double radius, size_t n_samples, double *out);

/**
 * Solves the static field equation for `n_sheets` sheets of one kind on
 * `nodes` points spanning `[-half_extent, half_extent]`, with the ends
 * pinned to the exact far-field potential. `potential` and `field` receive
 * `nodes` values each (either may be NULL); `residual` the largest row
 * residual of the linear solve.
 */
enum MgStatus mg_solve_sheets(const double *positions,
                              const double *strengths,
                              size_t n_sheets,
                              enum MgSheetKind kind,
                              size_t nodes,
                              double half_extent,
                              double *potential,
                              double *field,
                              double *residual);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MOMGAUGE_H */
