/*
 * freelie - exact free Lie algebra kernel.
 *
 * C surface over the C++ core: opaque handles, integer status codes,
 * library-owned strings. Every function returns FL_OK (0) on success or a
 * nonzero FL_ERR_* code; boolean results go through out-parameters. A
 * human-readable message for the last failed call on a context is available
 * via fl_ctx_last_error(); context-free functions use fl_last_error().
 *
 * Elements belong to the context that created them and must be freed with
 * fl_elem_free before the context is destroyed. Strings returned through
 * char** out-parameters are heap-allocated; release them with
 * fl_string_free. A context is not safe for concurrent use; distinct
 * contexts are independent.
 */

#ifndef FREELIE_H
#define FREELIE_H

#ifdef __cplusplus
extern "C" {
#endif

#define FL_OK 0
#define FL_ERR_PARSE 2
#define FL_ERR_FIELD_MISMATCH 3
#define FL_ERR_DOMAIN 4
#define FL_ERR_RANK 5
#define FL_ERR_DEGREE_CAP 6
#define FL_ERR_NONLINEAR 7
#define FL_ERR_UNBOUND_VARIABLE 8
#define FL_ERR_INTERNAL 9
#define FL_ERR_INVALID 10

typedef struct fl_ctx fl_ctx;
typedef struct fl_elem fl_elem;

/* --- lifecycle ----------------------------------------------------------- */

/* field: "q" for the rationals or "fp:P" for a prime field.
 * degree_cap <= 0 selects the default (24). */
int fl_ctx_new(int rank, const char* field, int degree_cap, fl_ctx** out);
void fl_ctx_free(fl_ctx* ctx);
int fl_ctx_rank(const fl_ctx* ctx);
const char* fl_ctx_field(const fl_ctx* ctx);

const char* fl_ctx_last_error(const fl_ctx* ctx);
const char* fl_last_error(void);
const char* fl_strerror(int code);

void fl_elem_free(fl_elem* e);
void fl_string_free(char* s);

/* --- elements ------------------------------------------------------------ */

/* Parses the term grammar
 *   expr := gen | '[' expr ',' expr ']' | expr '+' expr | scalar '*' expr
 * and returns the Hall-basis normal form. */
int fl_elem_parse(fl_ctx* ctx, const char* text, fl_elem** out);
int fl_elem_print(fl_ctx* ctx, const fl_elem* e, char** out);
int fl_elem_zero(fl_ctx* ctx, fl_elem** out);
int fl_elem_add(fl_ctx* ctx, const fl_elem* u, const fl_elem* v, fl_elem** out);
int fl_elem_scalar_mul(fl_ctx* ctx, const char* scalar, const fl_elem* u, fl_elem** out);
int fl_elem_bracket(fl_ctx* ctx, const fl_elem* u, const fl_elem* v, fl_elem** out);
int fl_elem_equal(fl_ctx* ctx, const fl_elem* u, const fl_elem* v, int* out);
int fl_elem_is_zero(fl_ctx* ctx, const fl_elem* u, int* out);
int fl_elem_max_degree(fl_ctx* ctx, const fl_elem* u, int* out);
int fl_elem_truncate(fl_ctx* ctx, const fl_elem* u, int max_degree, fl_elem** out);
/* gen is a generator name ("a", "b", "c", "a1", ...). */
int fl_elem_ad_power(fl_ctx* ctx, const fl_elem* u, const char* gen, int n, fl_elem** out);
int fl_elem_poly_action(fl_ctx* ctx, const fl_elem* u, const char* poly, const char* gen,
                        fl_elem** out);

/* --- Hall basis ------------------------------------------------------------ */

/* One monomial per line in ascending order, then '#'-prefixed per-degree
 * count lines. */
int fl_hall_basis(fl_ctx* ctx, int max_degree, char** out);
/* Witt formula; context-free. */
int fl_witt_dimension(int rank, int degree, unsigned long long* out);

/* --- interpretations ------------------------------------------------------- */

/* [b, f(a^2)] + alpha*a. */
int fl_encode_poly(fl_ctx* ctx, const char* poly, const char* alpha, fl_elem** out);
int fl_decode_poly(fl_ctx* ctx, const fl_elem* u, char** poly_out, char** alpha_out);
/* u ~ v <=> [u - v, a] = 0. */
int fl_equiv(fl_ctx* ctx, const fl_elem* u, const fl_elem* v, int* out);

int fl_witness_s(fl_ctx* ctx, const fl_elem* r, int m, int n, fl_elem** out);
int fl_witness_t(fl_ctx* ctx, const fl_elem* r, int m, int n, fl_elem** out);

int fl_check_phi(fl_ctx* ctx, const fl_elem* x, const fl_elem* y, const fl_elem* z,
                 const fl_elem* z1, const fl_elem* z2, int* out);
int fl_psi_witness(fl_ctx* ctx, const char* poly, const char* alpha, const char* beta,
                   fl_elem** x, fl_elem** y, fl_elem** z, fl_elem** z1, fl_elem** z2);

int fl_check_oplus(fl_ctx* ctx, const fl_elem* u, const fl_elem* v, const fl_elem* w, int* out);
int fl_otimes_check(fl_ctx* ctx, const char* f, const char* g, const char* h, int* out);

/* Scalar arguments are parsed over the context field; tuples are built as
 * (alpha*a_1, ..., alpha*a_n). */
int fl_check_field_add(fl_ctx* ctx, const char* x, const char* y, const char* z, int* out);
int fl_check_field_mul(fl_ctx* ctx, const char* x, const char* y, const char* z, int* out);
int fl_check_scalar_action(fl_ctx* ctx, const fl_elem* x, const char* alpha, const fl_elem* z,
                           int* out);

/* --- equation systems (self-contained JSON, context-free) ------------------ */

/* poly-system JSON in, lie-system JSON (with a "mapping" block) out. */
int fl_system_compile(const char* poly_system_json, char** out);
/* lie-system JSON in; report JSON out: feasibility, kernel dimension, basis
 * assignments and a particular solution when the system is affine. */
int fl_system_solve_truncated(const char* system_json, int degree, char** report_out);
/* Per-equation residual report; *pass is 1 iff every equation holds. */
int fl_system_verify(const char* system_json, const char* assignment_json, char** report_out,
                     int* pass);

#ifdef __cplusplus
}
#endif

#endif /* FREELIE_H */
