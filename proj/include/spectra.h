/* C interface to the spectra library. */
#ifndef SPECTRA_H
#define SPECTRA_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SPECTRA_BUILDING_LIBRARY)
#define SPECTRA_API __attribute__((visibility("default")))
#else
#define SPECTRA_API
#endif

typedef enum spectra_status {
  SPECTRA_OK = 0,
  SPECTRA_E_INVALID_ARGUMENT,
  SPECTRA_E_IMAGINARY_RESIDUE,
  SPECTRA_E_DEGENERATE_PARAMETER,
  SPECTRA_E_NON_INTEGRABLE,
  SPECTRA_E_ZERO_POLYNOMIAL,
  SPECTRA_E_STEP_FAILURE,
  SPECTRA_E_OUT_OF_GRID,
  SPECTRA_E_BRANCH_UNDEFINED,
  SPECTRA_E_CONVENTION_UNRESOLVED,
  SPECTRA_E_NO_SUCH_ROOT,
  SPECTRA_E_NODE_DETECTED,
  SPECTRA_E_PRECONDITION_VIOLATED,
  SPECTRA_E_NOT_CONVERGED,
  SPECTRA_E_INSUFFICIENT_DECAY,
  SPECTRA_E_AMBIGUOUS_ZERO,
  SPECTRA_E_CONFIG,
  SPECTRA_E_INTERNAL
} spectra_status;

typedef struct spectra_config spectra_config;
typedef struct spectra_potential spectra_potential;
typedef struct spectra_result spectra_result;

/* Message for the last failing call on this thread; never NULL. */
SPECTRA_API const char* spectra_last_error(void);
SPECTRA_API const char* spectra_status_name(spectra_status s);
SPECTRA_API void spectra_free_string(char* s);

SPECTRA_API spectra_status spectra_config_parse(const char* json_text, spectra_config** out);
SPECTRA_API void spectra_config_free(spectra_config* cfg);
/* Tolerance from the config, or a negative value when absent. */
SPECTRA_API double spectra_config_tol(const spectra_config* cfg);
SPECTRA_API spectra_status spectra_config_potential(const spectra_config* cfg, spectra_potential** out);

SPECTRA_API spectra_status spectra_potential_gendenshtein(double a, double b, spectra_potential** out);
SPECTRA_API spectra_status spectra_potential_milson(double h0_re, double h0_im, double kappa_plus,
                                                    spectra_potential** out);
SPECTRA_API void spectra_potential_free(spectra_potential* p);
SPECTRA_API spectra_status spectra_potential_level_count(const spectra_potential* p, int* count);
SPECTRA_API spectra_status spectra_potential_level(const spectra_potential* p, int n, double* energy,
                                                   double* lambda_re, double* lambda_im);
/* V as a function of eta. */
SPECTRA_API spectra_status spectra_potential_eval(const spectra_potential* p, double eta, double* value);
SPECTRA_API spectra_status spectra_spectrum_json(const spectra_potential* p, char** json);

/* {"order", "alpha", "coeffs"} of the order-m Routh polynomial. */
SPECTRA_API spectra_status spectra_routh_json(int m, double alpha_re, double alpha_im, char** json);
/* Real roots with multiplicity of sum coeffs[k] x^k. */
SPECTRA_API spectra_status spectra_real_roots(const double* coeffs, int n_coeffs, double* roots, int capacity,
                                              int* count);

/* command: "spectrum", "verify", "scan-nodeless", "partner" or "identities".
   tol <= 0 selects the config value or the command default; workers <= 0 means 1. */
SPECTRA_API spectra_status spectra_run(const char* command, const spectra_config* cfg, double tol, int workers,
                                       spectra_result** out);
SPECTRA_API int spectra_result_passed(const spectra_result* r);
SPECTRA_API const char* spectra_result_summary(const spectra_result* r);
SPECTRA_API int spectra_result_file_count(const spectra_result* r);
SPECTRA_API const char* spectra_result_file_name(const spectra_result* r, int i);
SPECTRA_API const char* spectra_result_file_data(const spectra_result* r, int i);
SPECTRA_API void spectra_result_free(spectra_result* r);

#ifdef __cplusplus
}
#endif

#endif
