#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace binphi {

/// Upper bound on the number of terms (or dense coefficients) any single
/// operation is willing to materialize. Desk-scale guard, not a tuning knob.
inline constexpr std::uint64_t kTermBudget = std::uint64_t{1} << 22;

/// Canonical sparse polynomial over the integers: terms strictly ascending
/// by exponent, no zero coefficients, the empty sequence is zero. Structural
/// equality coincides with mathematical equality. Values are immutable.
///
/// Coefficients are checked signed 64-bit, exponents unsigned 64-bit;
/// operations report overflow instead of wrapping.
class SparsePoly {
  public:
    struct Term {
        std::uint64_t exp = 0;
        std::int64_t coeff = 0;

        friend bool operator==(const Term &, const Term &) = default;
    };

    /// The zero polynomial.
    SparsePoly() = default;

    /// Canonicalizes: sorts, sums duplicate exponents, drops zeros.
    static SparsePoly from_terms(std::span<const Term> terms);
    static SparsePoly from_terms(std::initializer_list<Term> terms);

    static SparsePoly zero() { return {}; }
    static SparsePoly one() { return monomial(0, 1); }
    static SparsePoly monomial(std::uint64_t exp, std::int64_t coeff = 1);

    const std::vector<Term> &terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// degree(0) := 0 by convention.
    std::uint64_t degree() const noexcept {
        return terms_.empty() ? 0 : terms_.back().exp;
    }

    friend bool operator==(const SparsePoly &, const SparsePoly &) = default;

    friend SparsePoly operator+(const SparsePoly &f, const SparsePoly &g);
    friend SparsePoly operator-(const SparsePoly &f, const SparsePoly &g);
    friend SparsePoly operator*(const SparsePoly &f, const SparsePoly &g);

  private:
    struct canonical_tag {};
    SparsePoly(std::vector<Term> terms, canonical_tag)
        : terms_(std::move(terms)) {}

    std::vector<Term> terms_;
};

/// Quotient f / g when g divides f exactly over the integers.
/// Classical descending long division on sparse terms.
SparsePoly exact_div(const SparsePoly &f, const SparsePoly &g);

/// Sum of coefficients.
std::int64_t eval_at_one(const SparsePoly &f);

/// 1 + X + ... + X^(n-1) for n >= 1.
SparsePoly geometric_sum(std::uint64_t n);

/// X^n - 1 (zero when n == 0).
SparsePoly x_pow_minus_one(std::uint64_t n);

/// Ascending coefficient vector, length degree+1; the zero polynomial
/// densifies to [0]. Fails with a capacity error when degree exceeds the cap.
std::vector<std::int64_t> to_dense(const SparsePoly &f,
                                   std::uint64_t max_degree_cap);

} // namespace binphi
