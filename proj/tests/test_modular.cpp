#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "modular.hpp"

using namespace binphi;

namespace {

// Independent oracles, deliberately naive.

std::uint64_t gcd_by_divisor_scan(std::uint64_t a, std::uint64_t b) {
    std::uint64_t best = 0;
    for (std::uint64_t d = 1; d <= std::max(a, b); ++d)
        if (a % d == 0 && b % d == 0)
            best = d;
    return best;
}

bool prime_by_trial_division(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t mod_pow_naive(std::uint64_t base, std::uint64_t exp,
                            std::uint64_t modulus) {
    std::uint64_t r = 1 % modulus;
    for (std::uint64_t i = 0; i < exp; ++i)
        r = r * (base % modulus) % modulus;
    return r;
}

std::uint64_t inverse_by_search(std::uint64_t x, std::uint64_t m) {
    for (std::uint64_t c = 1; c < m; ++c)
        if (c * (x % m) % m == 1)
            return c;
    return 0;
}

template <class Fn> std::optional<errc> thrown_code(Fn &&fn) {
    try {
        fn();
        return std::nullopt;
    } catch (const error &e) {
        return e.code();
    }
}

std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t n = 2; n <= limit; ++n)
        if (prime_by_trial_division(n))
            ps.push_back(n);
    return ps;
}

} // namespace

TEST_CASE("gcd examples") {
    CHECK(gcd(12, 8) == 4);
    CHECK(gcd(7, 1) == 1);
    CHECK(gcd(35, 12) == gcd_by_divisor_scan(35, 12));
    CHECK(gcd(35, 12) == 1);
    CHECK(gcd(0, 5) == 5);
    CHECK(gcd(5, 0) == 5);
}

TEST_CASE("gcd agrees with divisor scan") {
    for (std::uint64_t a = 0; a <= 120; ++a)
        for (std::uint64_t b = 1; b <= 120; ++b)
            CHECK(gcd(a, b) == gcd_by_divisor_scan(a, b));
}

TEST_CASE("is_prime small examples") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(4));
    CHECK(is_prime(37));
    CHECK_FALSE(is_prime(37 * 41));
}

TEST_CASE("is_prime agrees with trial division up to 20000") {
    for (std::uint64_t n = 0; n <= 20000; ++n)
        CHECK(is_prime(n) == prime_by_trial_division(n));
}

TEST_CASE("is_prime rejects classical pseudoprimes") {
    CHECK_FALSE(is_prime(561));        // Carmichael
    CHECK_FALSE(is_prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
    CHECK_FALSE(is_prime(6601));
}

TEST_CASE("is_prime on a ten-digit prime, oracle first") {
    const std::uint64_t n = 9999999967ULL;
    REQUIRE(prime_by_trial_division(n));
    CHECK(is_prime(n));
    CHECK_FALSE(is_prime(n - 1));
}

TEST_CASE("mod_pow examples") {
    CHECK(mod_pow(3, 3, 5) == 2);
    CHECK(mod_pow(5, 1, 3) == 2);
    for (std::uint64_t x : {1, 2, 4, 7, 11})
        CHECK(mod_pow(x, 0, 9) == 1);
    CHECK(thrown_code([] { mod_pow(2, 10, 1); }) == errc::invalid_argument);
    CHECK(thrown_code([] { mod_pow(2, 10, 0); }) == errc::invalid_argument);
}

TEST_CASE("mod_pow agrees with naive repeated multiplication") {
    for (std::uint64_t m = 2; m <= 50; ++m)
        for (std::uint64_t e = 0; e <= 20; ++e)
            for (std::uint64_t b = 0; b <= 50; ++b)
                CHECK(mod_pow(b, e, m) == mod_pow_naive(b, e, m));
}

TEST_CASE("mod_pow stays exact at the word boundary") {
    // (m-1)^2 = 1 and (m-1)^3 = m-1 mod m exercise 128-bit intermediates.
    const std::uint64_t m = 18446744073709551557ULL; // largest 64-bit prime
    CHECK(mod_pow(m - 1, 2, m) == 1);
    CHECK(mod_pow(m - 1, 3, m) == m - 1);
    // Fermat: a^(p-1) = 1 mod p for a prime verified by trial division.
    const std::uint64_t p = 9999999967ULL;
    REQUIRE(prime_by_trial_division(p));
    CHECK(mod_pow(3, p - 1, p) == 1);
    CHECK(mod_pow(1234567891, p - 1, p) == 1);
}

TEST_CASE("PrimePair normalizes order and validates") {
    const PrimePair a(5, 3);
    const PrimePair b(3, 5);
    CHECK(a.p() == 5);
    CHECK(a.q() == 3);
    CHECK(a == b);
    CHECK(a.product() == 15);

    CHECK(thrown_code([] { PrimePair(4, 2); }) == errc::invalid_argument);
    CHECK(thrown_code([] { PrimePair(3, 3); }) == errc::invalid_argument);
    CHECK(thrown_code([] { PrimePair(1, 2); }) == errc::invalid_argument);
    CHECK(thrown_code([] { PrimePair(0, 5); }) == errc::invalid_argument);
}

TEST_CASE("PrimePair names the non-prime argument") {
    try {
        PrimePair pair(4, 2);
        FAIL("expected an error");
    } catch (const error &e) {
        CHECK(std::string(e.what()).find("4") != std::string::npos);
    }
}

TEST_CASE("PrimePair rejects products beyond the word budget") {
    const std::uint64_t p = 4294967311ULL; // 2^32 + 15
    const std::uint64_t q = 4294967291ULL; // 2^32 - 5
    REQUIRE(prime_by_trial_division(p));
    REQUIRE(prime_by_trial_division(q));
    CHECK(thrown_code([&] { PrimePair(p, q); }) == errc::overflow);
}

TEST_CASE("CoprimePair validates, normalizes, and records the swap") {
    const CoprimePair ab(3, 2);
    CHECK(ab.a() == 3);
    CHECK(ab.b() == 2);
    CHECK_FALSE(ab.swapped());

    const CoprimePair swapped(2, 3);
    CHECK(swapped.a() == 3);
    CHECK(swapped.b() == 2);
    CHECK(swapped.swapped());

    const CoprimePair b_one(5, 1);
    CHECK(b_one.b() == 1);

    CHECK(thrown_code([] { CoprimePair(6, 4); }) == errc::invalid_argument);
    CHECK(thrown_code([] { CoprimePair(1, 1); }) == errc::invalid_argument);
    CHECK(thrown_code([] { CoprimePair(0, 3); }) == errc::invalid_argument);
}

TEST_CASE("CoprimePair error message carries the gcd") {
    try {
        CoprimePair pair(6, 4);
        FAIL("expected an error");
    } catch (const error &e) {
        CHECK(std::string(e.what()).find("gcd(6,4)=2") != std::string::npos);
    }
}

TEST_CASE("reduction_params examples against exhaustive inverse search") {
    struct Case {
        std::uint64_t p, q, lambda, mu, r, s;
    };
    // Expected values recomputed by inverse_by_search below before compare.
    const Case cases[] = {
        {5, 3, 2, 2, 1, 1},
        {3, 2, 1, 2, 0, 1},
        {7, 5, 3, 3, 2, 2},
    };
    for (const auto &c : cases) {
        CAPTURE(c.p);
        REQUIRE(inverse_by_search(c.p, c.q) == c.lambda);
        REQUIRE(inverse_by_search(c.q, c.p) == c.mu);
        const auto params = reduction_params(PrimePair(c.p, c.q));
        CHECK(params == ReductionParams{c.lambda, c.mu, c.r, c.s});
        CHECK(params.r * c.p + params.s * c.q == (c.p - 1) * (c.q - 1));
    }
}

TEST_CASE("reduction_params invariants over all pairs with pq <= 200") {
    const auto primes = primes_upto(100);
    for (std::uint64_t q : primes) {
        for (std::uint64_t p : primes) {
            if (p <= q || p * q > 200)
                continue;
            CAPTURE(p);
            CAPTURE(q);
            const auto params = reduction_params(PrimePair(p, q));
            CHECK(params.lambda > 0);
            CHECK(params.lambda < q);
            CHECK(params.mu > 0);
            CHECK(params.mu < p);
            CHECK(params.lambda * p % q == 1);
            CHECK(params.mu * q % p == 1);
            CHECK(params.r == params.lambda - 1);
            CHECK(params.s == params.mu - 1);
            CHECK(params.r * p + params.s * q == (p - 1) * (q - 1));
            CHECK(params.lambda == inverse_by_search(p, q));
            CHECK(params.mu == inverse_by_search(q, p));
        }
    }
}
