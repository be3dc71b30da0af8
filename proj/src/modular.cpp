#include "modular.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "errors.hpp"

namespace binphi {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                      std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

// Witness set proven complete for all n < 2^64.
constexpr std::uint64_t kWitnesses[] = {2,  3,  5,  7,  11, 13,
                                        17, 19, 23, 29, 31, 37};

// Keep 4*p*q representable so the construction modules can form exponents
// like i*p + j*q (< 2*p*q) and p*q + 1 without overflow checks everywhere.
void require_product_headroom(std::uint64_t hi, std::uint64_t lo,
                              const char *what) {
    if (hi > std::numeric_limits<std::uint64_t>::max() / 4 / lo)
        fail(errc::overflow,
             std::string(what) + " product exceeds the 64-bit exponent domain");
}

} // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t modulus) {
    if (modulus < 2)
        fail(errc::invalid_argument, "mod_pow: modulus must be >= 2");
    std::uint64_t result = 1;
    std::uint64_t acc = base % modulus;
    while (exp != 0) {
        if (exp & 1)
            result = mul_mod(result, acc, modulus);
        acc = mul_mod(acc, acc, modulus);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2)
        return false;
    for (std::uint64_t p : kWitnesses)
        if (n % p == 0)
            return n == p;

    std::uint64_t d = n - 1;
    int twos = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++twos;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < twos; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

PrimePair::PrimePair(std::uint64_t first, std::uint64_t second) {
    if (!is_prime(first))
        fail(errc::invalid_argument, "not prime: " + std::to_string(first));
    if (!is_prime(second))
        fail(errc::invalid_argument, "not prime: " + std::to_string(second));
    if (first == second)
        fail(errc::invalid_argument,
             "primes must be distinct, got " + std::to_string(first) +
                 " twice");
    p_ = std::max(first, second);
    q_ = std::min(first, second);
    require_product_headroom(p_, q_, "prime");
}

CoprimePair::CoprimePair(std::uint64_t first, std::uint64_t second) {
    if (first == 0 || second == 0)
        fail(errc::invalid_argument, "values must be >= 1");
    const std::uint64_t g = gcd(first, second);
    if (g != 1)
        fail(errc::invalid_argument,
             "not coprime: gcd(" + std::to_string(first) + "," +
                 std::to_string(second) + ")=" + std::to_string(g));
    if (first == second)
        fail(errc::invalid_argument, "values must be distinct");
    a_ = std::max(first, second);
    b_ = std::min(first, second);
    swapped_ = first < second;
    require_product_headroom(a_, b_, "coprime");
}

ReductionParams reduction_params(const PrimePair &pair) {
    const std::uint64_t p = pair.p();
    const std::uint64_t q = pair.q();
    const std::uint64_t lambda = mod_pow(p, q - 2, q);
    const std::uint64_t mu = mod_pow(q, p - 2, p);
    // The Fermat-exponent form must land strictly inside (0, modulus).
    if (lambda == 0 || lambda >= q || lambda * p % q != 1)
        fail(errc::invariant, "lambda is not the reduced inverse of p mod q");
    if (mu == 0 || mu >= p || mu * q % p != 1)
        fail(errc::invariant, "mu is not the reduced inverse of q mod p");
    const ReductionParams params{lambda, mu, lambda - 1, mu - 1};
    if (params.r * p + params.s * q != (p - 1) * (q - 1))
        fail(errc::invariant, "r*p + s*q != (p-1)*(q-1)");
    return params;
}

} // namespace binphi
