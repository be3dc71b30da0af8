/* binphi -- binary cyclotomic polynomials Phi_pq over the integers.
 *
 * C API of the shared library. All polynomial values are opaque handles
 * to canonical sparse polynomials (sorted terms, no zero coefficients).
 * Every fallible call returns a binphi_status; on failure a human-readable
 * message is available from binphi_last_error() until the next failing
 * call on the same thread.
 */
#ifndef BINPHI_H
#define BINPHI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BINPHI_API __declspec(dllexport)
#else
#define BINPHI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum binphi_status {
    BINPHI_OK = 0,
    BINPHI_ERR_INVALID = 1,   /* input fails a precondition */
    BINPHI_ERR_OVERFLOW = 2,  /* 64-bit coefficient/exponent arithmetic would wrap */
    BINPHI_ERR_CAPACITY = 3,  /* result exceeds the desk-scale size budget */
    BINPHI_ERR_INEXACT = 4,   /* polynomial division left a remainder */
    BINPHI_ERR_INVARIANT = 5, /* internal consistency check failed (a bug) */
    BINPHI_ERR_NULLPTR = 6    /* required pointer argument was NULL */
} binphi_status;

BINPHI_API const char *binphi_version(void);
BINPHI_API const char *binphi_status_str(binphi_status st);
BINPHI_API const char *binphi_last_error(void);

/* ---- integer number theory ---- */

BINPHI_API uint64_t binphi_gcd(uint64_t a, uint64_t b);

/* Deterministic for the full 64-bit range. */
BINPHI_API int binphi_is_prime(uint64_t n);

/* base^exp mod modulus, modulus >= 2. */
BINPHI_API binphi_status binphi_mod_pow(uint64_t base, uint64_t exp,
                                        uint64_t modulus, uint64_t *out);

/* lambda = inverse of p mod q, mu = inverse of q mod p (reduced residues),
 * r = lambda-1, s = mu-1; r*p + s*q = (p-1)*(q-1). */
typedef struct binphi_params {
    uint64_t lambda;
    uint64_t mu;
    uint64_t r;
    uint64_t s;
} binphi_params;

/* p and q: distinct primes in either order. */
BINPHI_API binphi_status binphi_reduction_params(uint64_t p, uint64_t q,
                                                 binphi_params *out);

/* ---- sparse integer polynomials ---- */

typedef struct binphi_poly binphi_poly;

/* Duplicate exponents are coefficient-summed, zero coefficients dropped.
 * exps/coeffs may be NULL when count is 0 (the zero polynomial). */
BINPHI_API binphi_status binphi_poly_from_terms(const uint64_t *exps,
                                                const int64_t *coeffs,
                                                size_t count,
                                                binphi_poly **out);

/* 1 + X + ... + X^(n-1), n >= 1. */
BINPHI_API binphi_status binphi_poly_geometric_sum(uint64_t n,
                                                   binphi_poly **out);

BINPHI_API void binphi_poly_free(binphi_poly *f);

BINPHI_API size_t binphi_poly_term_count(const binphi_poly *f);
/* Terms are indexed in ascending exponent order. */
BINPHI_API binphi_status binphi_poly_term(const binphi_poly *f, size_t index,
                                          uint64_t *exp, int64_t *coeff);
/* Degree of the zero polynomial is 0 by convention. */
BINPHI_API uint64_t binphi_poly_degree(const binphi_poly *f);
BINPHI_API int binphi_poly_is_zero(const binphi_poly *f);
BINPHI_API int binphi_poly_equal(const binphi_poly *f, const binphi_poly *g);

BINPHI_API binphi_status binphi_poly_add(const binphi_poly *f,
                                         const binphi_poly *g,
                                         binphi_poly **out);
BINPHI_API binphi_status binphi_poly_sub(const binphi_poly *f,
                                         const binphi_poly *g,
                                         binphi_poly **out);
BINPHI_API binphi_status binphi_poly_mul(const binphi_poly *f,
                                         const binphi_poly *g,
                                         binphi_poly **out);

/* Exact division over the integers; BINPHI_ERR_INEXACT if g does not
 * divide f, BINPHI_ERR_INVALID if g is zero. */
BINPHI_API binphi_status binphi_poly_exact_div(const binphi_poly *f,
                                               const binphi_poly *g,
                                               binphi_poly **out);

/* Sum of coefficients. */
BINPHI_API binphi_status binphi_poly_eval_at_one(const binphi_poly *f,
                                                 int64_t *out);

/* Ascending coefficient vector of length degree+1 (zero -> [0]).
 * Fails with BINPHI_ERR_CAPACITY when degree > max_degree_cap.
 * Free the vector with binphi_dense_free(). */
BINPHI_API binphi_status binphi_poly_to_dense(const binphi_poly *f,
                                              uint64_t max_degree_cap,
                                              int64_t **out_coeffs,
                                              size_t *out_len);
BINPHI_API void binphi_dense_free(int64_t *coeffs);

/* ---- cyclotomic constructions ---- */

typedef enum binphi_method {
    BINPHI_METHOD_CLOSED = 0,   /* 1 + (X-1) * sum of floor-division exponents */
    BINPHI_METHOD_LENSTRA = 1,  /* inverse-pair double sums (lambda, mu) */
    BINPHI_METHOD_LAMLEUNG = 2, /* coefficient index sets (r, s) */
    BINPHI_METHOD_ORACLE = 3    /* exact polynomial division of X^pq - 1 */
} binphi_method;

/* Phi_pq for distinct primes p, q (either order). */
BINPHI_API binphi_status binphi_phi(uint64_t p, uint64_t q,
                                    binphi_method method, binphi_poly **out);

/* Left-hand side of the telescoping identity
 * X^(ai mod b) + (X^b - 1) * sum_{j=1..floor(ai/b)} X^(ai - bj),
 * which equals X^(ai). Requires coprime a > b >= 1. */
BINPHI_API binphi_status binphi_lemma_expand(uint64_t a, uint64_t b,
                                             uint64_t i, binphi_poly **out);

/* X^ab - 1 = (X-1) * (1+...+X^(a-1)) * (1+...+X^(b-1)) * core for
 * coprime a > b >= 1 (inputs are reordered if needed; *swapped reports it).
 * The product identity is checked internally before returning. */
BINPHI_API binphi_status binphi_factor_x_ab_minus_1(uint64_t a, uint64_t b,
                                                    binphi_poly **linear,
                                                    binphi_poly **geom_a,
                                                    binphi_poly **geom_b,
                                                    binphi_poly **core,
                                                    int *swapped);

/* ---- verification ---- */

#define BINPHI_FAILURES_CAP 256

typedef struct binphi_report {
    uint64_t p;
    uint64_t q;
    int methods_agree;      /* all four constructions identical */
    int coeffs_in_unit_set; /* every coefficient in {-1, 0, 1} */
    int degree_ok;          /* degree == (p-1)*(q-1) */
    int palindrome_ok;      /* coefficient vector equals its reversal */
    int eval_one_ok;        /* Phi(1) == 1 and #(+1) - #(-1) == 1 */
    int ok;                 /* failures is empty */
    binphi_params params;
    char failures[BINPHI_FAILURES_CAP]; /* "; "-joined labels, "" when ok */
} binphi_report;

BINPHI_API binphi_status binphi_verify_pair(uint64_t p, uint64_t q,
                                            binphi_report *out);

/* All prime pairs p > q with p*q <= max_product (max_product >= 6),
 * ordered by ascending p*q then ascending q. Reports may be computed
 * concurrently with `jobs` threads; the output order is fixed.
 * Free with binphi_reports_free(). */
BINPHI_API binphi_status binphi_sweep(uint64_t max_product, unsigned jobs,
                                      binphi_report **out_reports,
                                      size_t *out_count);
BINPHI_API void binphi_reports_free(binphi_report *reports);

/* Pair enumeration alone, as a flat [p0,q0,p1,q1,...] array in the same
 * order as binphi_sweep. Free with binphi_pairs_free(). */
BINPHI_API binphi_status binphi_prime_pairs(uint64_t max_product,
                                            uint64_t **out_pairs,
                                            size_t *out_pair_count);
BINPHI_API void binphi_pairs_free(uint64_t *pairs);

#ifdef __cplusplus
}
#endif

#endif /* BINPHI_H */
