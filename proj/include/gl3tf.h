/* gl3tf: geometric-side toolkit for the GL(3) trace formula.
 *
 * C interface of the shared library.  All functions return a gl3tf_status;
 * results come back through out-parameters.  Strings returned through
 * char** are allocated by the library and must be released with
 * gl3tf_string_free.  Handles are opaque and freed with their _free call.
 * A session carries configuration (volumes, c_Q, C, tolerances, seed) and
 * the last error message; sessions are not thread-safe, everything reached
 * through distinct sessions is.
 */

#ifndef GL3TF_H
#define GL3TF_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  GL3TF_OK = 0,
  GL3TF_ERR_ARGUMENT = 1,  /* bad argument / parse failure */
  GL3TF_ERR_DOMAIN = 2,    /* mathematical precondition violated */
  GL3TF_ERR_TOLERANCE = 3, /* quadrature tolerance not met; value is best-effort */
  GL3TF_ERR_VERIFY = 4,    /* a verification or suite criterion failed */
  GL3TF_ERR_INTERNAL = 5
} gl3tf_status;

typedef struct gl3tf_session gl3tf_session;
typedef struct gl3tf_matrix gl3tf_matrix;
typedef struct gl3tf_testfn gl3tf_testfn;

gl3tf_session* gl3tf_session_new(void);
void gl3tf_session_free(gl3tf_session* s);

/* Configuration keys: vol_M0, vol_M21, vol_G, c_Q, C, precision, quad_tol,
 * quad_refine, seed, samples, hull_specs, ln2_placement (outside|inside),
 * constant_mode (drop|user).  Values are strings; numbers parsed as needed. */
gl3tf_status gl3tf_session_set(gl3tf_session* s, const char* key, const char* value);

/* Loads key=value lines (# comments allowed); flags should be applied after. */
gl3tf_status gl3tf_session_load_config(gl3tf_session* s, const char* path);

/* Message for the last failing call on this session. */
const char* gl3tf_last_error(const gl3tf_session* s);

/* Effective RNG seed after configuration (defaults < file < flags). */
unsigned long long gl3tf_session_seed(const gl3tf_session* s);

void gl3tf_string_free(char* s);

/* ---- root data ---- */

/* JSON dump: simple roots, dual weights, rho, Gram constants, Weyl group. */
gl3tf_status gl3tf_rootdata_json(gl3tf_session* s, char** out_json);

/* parabolic in {"P0","P21","P12"}; the Gram constant a_P. */
gl3tf_status gl3tf_gram_constant(gl3tf_session* s, const char* parabolic, double* out);

/* ---- combinatorial identity verification ---- */

/* which in {"6.3","7.1","moebius","all"}.  Returns GL3TF_ERR_VERIFY (with the
 * report still written) when any identity fails. */
gl3tf_status gl3tf_verify_lemmas(gl3tf_session* s, const char* which, long samples,
                                 unsigned long long seed, char** out_json);

/* ---- convex-hull weights ---- */

/* vertices: 18 doubles, six sum-zero triples in the fixed S3 order
 * (one-line Weyl labels 123,132,213,231,312,321); method "direct"|"limit". */
gl3tf_status gl3tf_hull_volume(gl3tf_session* s, const double* vertices18, const char* method,
                               double* out);

/* Vertex family Y_s = s^{-1}(T - H_s) from T ("a,b,c" rationals) and the
 * optional per-chamber H-data "123:a,b,c;213:..." (NULL or "" = all zero,
 * i.e. the Weyl orbit of T). */
gl3tf_status gl3tf_hull_volume_spec(gl3tf_session* s, const char* t_csv, const char* h_family,
                                    const char* method, double* out);

gl3tf_status gl3tf_cm0_weight(gl3tf_session* s, double n1, double n2, double n3, double* out);

/* Interval weight for the M21 hull; arguments are rational triples "a,b,c". */
gl3tf_status gl3tf_interval_weight(gl3tf_session* s, const char* hm, const char* hn_flip,
                                   const char* t, double* out);

/* ---- orbit classification ---- */

/* nine comma-separated rationals, row-major. */
gl3tf_status gl3tf_matrix_parse(gl3tf_session* s, const char* csv, gl3tf_matrix** out);
void gl3tf_matrix_free(gl3tf_matrix* m);

/* JSON: kind, eigenvalues, unipotent_subtype, ramified, jordan parts. */
gl3tf_status gl3tf_orbit_classify(gl3tf_session* s, const gl3tf_matrix* m, char** out_json);

/* equivalent=1 / inequivalent=0 through *out. */
gl3tf_status gl3tf_conjugacy_probe(gl3tf_session* s, const gl3tf_matrix* a, const gl3tf_matrix* b,
                                   long search_bound, int* out);

/* ---- weighted orbital integrals ---- */

/* Gaussian in Frobenius distance to a rational center matrix. */
gl3tf_status gl3tf_testfn_gaussian(gl3tf_session* s, const char* center_csv, double sigma,
                                   gl3tf_testfn** out);
void gl3tf_testfn_free(gl3tf_testfn* f);

/* kind in {"jm0","jm21","jm0T","jm21T","jm21Tu","jgmin","jgreg"}; z is a
 * rational string; T1/T2 and the additive constant are taken from arguments;
 * session quad_tol/quad_refine control the quadrature. */
gl3tf_status gl3tf_woi(gl3tf_session* s, const char* kind, const gl3tf_testfn* f, const char* z,
                       double t1, double t2, double constant, int use_constant, double* out_value,
                       double* out_error);

/* ---- partial zeta engine ---- */

/* primes: array of n finite primes (may be NULL when n = 0). */
gl3tf_status gl3tf_zeta_partial(gl3tf_session* s, double svalue, const long* primes, int n,
                                double* out);
gl3tf_status gl3tf_zeta_partial_derivative(gl3tf_session* s, double svalue, const long* primes,
                                           int n, double* out);

/* out_c = {c0, c1, c2} of (s-1) L^S(s) at s = 1. */
gl3tf_status gl3tf_laurent_at_one(gl3tf_session* s, const long* primes, int n, double out_c[3]);

gl3tf_status gl3tf_local_log_norm_integral(gl3tf_session* s, long p, int oracle_depth,
                                           char** out_json);

/* Coefficient set of the unipotent expansion, using session configuration. */
gl3tf_status gl3tf_coefficients(gl3tf_session* s, const long* primes, int n, char** out_json);

/* vol_G * f(z). */
gl3tf_status gl3tf_trivial_class_term(gl3tf_session* s, double f_at_z, double vol_g, double* out);

/* ---- acceptance suite ---- */

/* Runs every acceptance criterion; returns GL3TF_ERR_VERIFY if any fails
 * (the JSON report is written either way). */
gl3tf_status gl3tf_suite(gl3tf_session* s, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GL3TF_H */
