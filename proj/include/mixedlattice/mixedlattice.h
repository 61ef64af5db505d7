/* mixedlattice: a finite mixed-lattice engine and verification toolkit.
 *
 * A mixed lattice is a carrier with two partial orders (leq and sleq) in
 * which the mixed upper and lower envelopes exist for every pair of
 * elements. This library builds such structures, computes envelopes,
 * checks the named laws and axioms with counterexample witnesses, converts
 * between the order-theoretic and operation-table presentations, and
 * realizes the positive-rational divisibility structure exactly.
 *
 * All handles are opaque and must be released with the matching _free
 * function. Every function that can fail returns mlx_status and, when an
 * `err` out-parameter is supplied, stores a malloc'd diagnostic message in
 * it; release messages and other returned strings with mlx_string_free.
 * Structured results are returned as JSON text (UTF-8).
 */

#ifndef MIXEDLATTICE_H
#define MIXEDLATTICE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mlx_status {
  MLX_OK = 0,
  MLX_ERR_ARGUMENT = 1,  /* bad scalar argument or malformed value   */
  MLX_ERR_PARSE = 2,     /* document text could not be parsed        */
  MLX_ERR_STRUCTURE = 3, /* precondition on the structure not met    */
  MLX_ERR_INTERNAL = 4   /* invariant broken inside the engine       */
} mlx_status;

const char* mlx_status_name(mlx_status status);

typedef struct mlx_biposet mlx_biposet;
typedef struct mlx_algebra mlx_algebra;

void mlx_string_free(char* s);
void mlx_biposet_free(mlx_biposet* b);
void mlx_algebra_free(mlx_algebra* a);

/* ----- structures (.mlx documents, two partial orders) ----- */

/* Parse a .mlx document. */
mlx_status mlx_biposet_parse(const char* text, mlx_biposet** out, char** err);

/* Divisors of n (n >= 1) with numeric leq and divisibility sleq. */
mlx_status mlx_biposet_divisor(unsigned long long n, mlx_biposet** out, char** err);

size_t mlx_biposet_size(const mlx_biposet* b);

/* 1 when every envelope exists, else 0. */
int mlx_biposet_is_mixed_lattice(const mlx_biposet* b);

/* .mlx text in cover-generator form; parsing it reproduces the structure. */
mlx_status mlx_biposet_emit(const mlx_biposet* b, char** out);

/* Order diagram in DOT (solid/dashed/dotted edge styles). */
mlx_status mlx_biposet_dot(const mlx_biposet* b, char** out);

/* {"mixed_lattice": bool, "witness": {x, y, kind} | null} */
mlx_status mlx_biposet_validate_json(const mlx_biposet* b, char** out);

/* Full law report: every law verdict with witnesses, quasi-regularity,
 * equivalence consistency, and the conditional equalities. Fails with
 * MLX_ERR_STRUCTURE when b is not a mixed lattice. */
mlx_status mlx_biposet_laws_json(const mlx_biposet* b, char** out, char** err);

/* Sublattice closure of the subset named by comma-separated labels; with
 * `induced` nonzero the report also covers the induced substructure. */
mlx_status mlx_biposet_sublattice_json(const mlx_biposet* b, const char* labels_csv,
                                       int induced, char** out, char** err);

/* Envelope tables as an algebra. Requires a mixed lattice satisfying the
 * r0 law; refusals name the missing envelope or the r0 witness. */
mlx_status mlx_biposet_to_algebra(const mlx_biposet* b, mlx_algebra** out, char** err);

/* ----- algebras (.mla documents, two operation tables) ----- */

mlx_status mlx_algebra_parse(const char* text, mlx_algebra** out, char** err);
mlx_status mlx_algebra_emit(const mlx_algebra* a, char** out);
size_t mlx_algebra_size(const mlx_algebra* a);

/* Axiom suite (M1-M4b, Q1, Q2, P, R1, R2) plus derived identities. */
mlx_status mlx_algebra_axioms_json(const mlx_algebra* a, char** out);

/* Partial orders recovered from the tables. Requires M1-M4b. */
mlx_status mlx_algebra_to_orders(const mlx_algebra* a, mlx_biposet** out, char** err);

/* ----- enumeration ----- */

/* Enumerate all labeled mixed lattices on n elements (n <= 4): summary
 * counts and, when include_structures is nonzero, every structure as .mlx
 * text. */
mlx_status mlx_enumerate_json(size_t n, int include_structures, char** out,
                              char** err);

/* ----- positive rationals under divisibility ----- */

/* kind_upper nonzero: smallest t >= q divisible by r; zero: largest s <= q
 * dividing r. Rationals are "p" or "p/q" in ASCII decimal. */
mlx_status mlx_rat_envelope(int kind_upper, const char* r, const char* q,
                            char** result, char** err);

/* Sampled group-law verification over `count` pseudorandom triples with
 * numerators and denominators in [1, bound]; exact arithmetic. */
mlx_status mlx_rat_check_json(unsigned long long seed, unsigned long long count,
                              unsigned long long bound, char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* MIXEDLATTICE_H */
