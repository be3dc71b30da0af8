#pragma once

#include <cstdint>

namespace binphi {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// Deterministic Miller-Rabin, exact for the whole 64-bit range.
bool is_prime(std::uint64_t n) noexcept;

/// base^exp mod modulus with 128-bit intermediates; modulus must be >= 2.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t modulus);

/// Two distinct primes, normalized so that p > q. Inputs may come in either
/// order; the normalization is not observable. Rejects pairs whose product
/// would leave no headroom for 64-bit exponent arithmetic.
class PrimePair {
  public:
    PrimePair(std::uint64_t first, std::uint64_t second);

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t product() const noexcept { return p_ * q_; }

    friend bool operator==(const PrimePair &, const PrimePair &) = default;

  private:
    std::uint64_t p_ = 0;
    std::uint64_t q_ = 0;
};

/// Coprime pair normalized so that a > b >= 1; remembers whether the input
/// order was swapped (the factorization result reports it).
class CoprimePair {
  public:
    CoprimePair(std::uint64_t first, std::uint64_t second);

    std::uint64_t a() const noexcept { return a_; }
    std::uint64_t b() const noexcept { return b_; }
    std::uint64_t product() const noexcept { return a_ * b_; }
    bool swapped() const noexcept { return swapped_; }

    friend bool operator==(const CoprimePair &, const CoprimePair &) = default;

  private:
    std::uint64_t a_ = 0;
    std::uint64_t b_ = 0;
    bool swapped_ = false;
};

/// lambda = [p^(q-2)]_q is the reduced inverse of p mod q, mu = [q^(p-2)]_p
/// the reduced inverse of q mod p; r = lambda-1 and s = mu-1 satisfy
/// r*p + s*q = (p-1)*(q-1).
struct ReductionParams {
    std::uint64_t lambda = 0;
    std::uint64_t mu = 0;
    std::uint64_t r = 0;
    std::uint64_t s = 0;

    friend bool operator==(const ReductionParams &,
                           const ReductionParams &) = default;
};

ReductionParams reduction_params(const PrimePair &pair);

} // namespace binphi
