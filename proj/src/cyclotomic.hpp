#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modular.hpp"
#include "poly.hpp"

namespace binphi {

/// Largest p*q (or a*b) the construction routines accept. Keeps every
/// intermediate within the polynomial term budget.
inline constexpr std::uint64_t kMaxProduct = kTermBudget;

/// Exponents of the +1 and -1 terms of Phi_pq as generated by a summation
/// formula, kept apart per sign class so they can be compared as multisets
/// before any cancellation could hide a discrepancy.
struct ExponentSets {
    std::vector<std::uint64_t> positive;
    std::vector<std::uint64_t> negative;
};

/// Double sums over i*p + j*q driven by (lambda, mu); the correction-sum
/// exponents i*p + j*q - p*q are asserted non-negative.
ExponentSets lenstra_exponents(const PrimePair &pair);

/// Index sets driven by (r, s) = (lambda-1, mu-1); asserts the two sets are
/// disjoint and duplicate-free, as the unit-coefficient reading requires.
ExponentSets lam_leung_exponents(const PrimePair &pair);

/// Phi_pq = 1 + (X-1) * sum_{i=0}^{q-1} sum_{j=1}^{floor(p*i/q)} X^(p*i-q*j).
SparsePoly phi_closed_form(const PrimePair &pair);

/// Phi_pq from the inverse-pair double sums (Lenstra).
SparsePoly phi_lenstra(const PrimePair &pair);

/// Phi_pq from the coefficient index sets (Lam-Leung).
SparsePoly phi_lam_leung(const PrimePair &pair);

/// Phi_pq = (X^pq - 1)(X - 1) / ((X^p - 1)(X^q - 1)) by exact division;
/// independent of the summation formulas above.
SparsePoly phi_oracle(const PrimePair &pair);

enum class PhiMethod { closed, lenstra, lam_leung, oracle };

SparsePoly phi(const PrimePair &pair, PhiMethod method);

/// X^(ai mod b) + (X^b - 1) * sum_{j=1}^{floor(ai/b)} X^(ai - bj).
/// Equal to X^(ai); callers test that equality. Any i >= 0 is accepted,
/// although only i in [0, b) is ever needed by the factorization.
SparsePoly lemma_expand(const CoprimePair &pair, std::uint64_t i);

/// X^ab - 1 = linear * geom_a * geom_b * core with
/// core = 1 + (X-1) * sum_{i=0}^{b-1} sum_{j=1}^{floor(ai/b)} X^(ai - bj).
struct FactorizationResult {
    SparsePoly linear; // X - 1
    SparsePoly geom_a; // 1 + ... + X^(a-1)
    SparsePoly geom_b; // 1 + ... + X^(b-1)
    SparsePoly core;
    bool swapped = false;
};

/// The product of the four factors is checked against X^ab - 1 before
/// returning; a mismatch is an invariant violation, not bad input.
FactorizationResult factor_x_ab_minus_1(const CoprimePair &pair);

struct VerificationReport {
    explicit VerificationReport(const PrimePair &pr) : pair(pr) {}

    PrimePair pair;
    ReductionParams params{};
    bool methods_agree = false;
    bool coeffs_in_unit_set = false;
    bool degree_ok = false;
    bool palindrome_ok = false;
    bool eval_one_ok = false;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Runs every check on one pair. Check failures are data, not errors.
VerificationReport verify_pair(const PrimePair &pair);

/// All prime pairs p > q with p*q <= max_product, ascending by p*q then q.
std::vector<PrimePair> prime_pairs(std::uint64_t max_product);

/// verify_pair over prime_pairs(max_product); max_product must be >= 6.
/// Pairs may be verified concurrently with `jobs` threads, the output order
/// is always the enumeration order. Per-pair errors (e.g. capacity) are
/// recorded in that pair's report instead of aborting the sweep.
std::vector<VerificationReport> sweep(std::uint64_t max_product,
                                      unsigned jobs = 1);

} // namespace binphi
