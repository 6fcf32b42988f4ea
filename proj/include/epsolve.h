/* epsolve: crypto-Hermitian matrix models, exact Hilbert-space metrics,
 * secular polynomials and exceptional-point reports behind a C interface.
 *
 * All functions return eps_status; readable results come back as heap
 * strings (JSON or CSV) released with eps_string_free.  Opaque handles are
 * released with their matching *_free.  eps_last_error() describes the most
 * recent failure on the calling thread.
 */
#ifndef EPSOLVE_H
#define EPSOLVE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eps_status {
    EPS_OK = 0,
    EPS_ERR_INTERNAL = 1,
    EPS_ERR_CONSTRAINT = 2,   /* malformed input, dimension/overlap violations */
    EPS_ERR_DOMAIN = 3,       /* parameters outside the unitarity domain */
    EPS_ERR_FIXTURE = 4       /* embedded fixture integrity failure */
} eps_status;

typedef struct eps_model eps_model;
typedef struct eps_poly eps_poly;
typedef struct eps_sweep eps_sweep;

const char* eps_version(void);
const char* eps_last_error(void);
void eps_string_free(char* s);

/* model specs: {"family":"boundary_well","N":11,"shift":"0",
 *               "couplings":["9/10","-9/10","9/10","-9/10"]}
 * families: boundary_well | atm | gegenbauer (field "a") */
eps_status eps_model_parse_json(const char* json_text, eps_model** out);
void eps_model_free(eps_model* model);
eps_status eps_model_set_shift(eps_model* model, const char* shift);
eps_status eps_model_matrix_json(const eps_model* model, char** out);
eps_status eps_model_matrix_csv(const eps_model* model, char** out);

/* Hermitizing metrics.  JSON carries the exact diagonal entries and the
 * residual certificate; with tridiag != 0 it adds the pseudometric, the
 * mixing weight v (rational string, NULL = "0") and the admissible
 * v-interval bracketed to width <= interval_tol. */
eps_status eps_metric_json(const eps_model* model, int tridiag, const char* v,
                           double interval_tol, char** out);
eps_status eps_metric_csv(const eps_model* model, int tridiag, const char* v, char** out);

/* paths assign each coupling slot the symbol t, -t, or a rational constant,
 * e.g. "t,-t,t,-9/10" */
eps_status eps_secular(const eps_model* model, const char* path, eps_poly** out);
void eps_poly_free(eps_poly* poly);
eps_status eps_poly_json(const eps_poly* poly, char** out);
eps_status eps_poly_pretty(const eps_poly* poly, char** out);
/* exact specialization at rational t; the result handle is univariate in s */
eps_status eps_poly_eval_t(const eps_poly* poly, const char* t, eps_poly** out);
/* exact root-multiplicity profile of a univariate polynomial */
eps_status eps_poly_profile_json(const eps_poly* poly, char** out);

eps_status eps_sweep_run(const eps_model* model, const char* path, double lo, double hi,
                         double step, eps_sweep** out);
void eps_sweep_free(eps_sweep* sweep);
eps_status eps_sweep_csv(const eps_sweep* sweep, char** out);
eps_status eps_sweep_events_json(const eps_sweep* sweep, double refine_tol, char** out);

/* exact EP localization on a path: discriminant roots isolated by Sturm
 * bisection, rational locations certified exactly with multiplicity
 * profiles attached */
eps_status eps_ep_report(const eps_model* model, const char* path, char** out);

/* integrity checksum plus the D = 7 evaluation and positive-root count of
 * the embedded boundary polynomial */
eps_status eps_fixture_verify(char** report_json);

#ifdef __cplusplus
}
#endif

#endif
