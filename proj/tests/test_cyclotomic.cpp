#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"

using namespace binphi;

namespace {

SparsePoly P(std::initializer_list<SparsePoly::Term> terms) {
    return SparsePoly::from_terms(terms);
}

// Hand long division cross-checked these; also recomputed here through the
// polynomial module before any formula path is trusted.
const SparsePoly kPhi6 = P({{2, 1}, {1, -1}, {0, 1}});
const SparsePoly kPhi15 =
    P({{8, 1}, {7, -1}, {5, 1}, {4, -1}, {3, 1}, {1, -1}, {0, 1}});

// Independent oracle expression built from polynomial primitives only.
SparsePoly phi_by_division(std::uint64_t p, std::uint64_t q) {
    return exact_div(x_pow_minus_one(p * q) * x_pow_minus_one(1),
                     x_pow_minus_one(p) * x_pow_minus_one(q));
}

template <class Fn> std::optional<errc> thrown_code(Fn &&fn) {
    try {
        fn();
        return std::nullopt;
    } catch (const error &e) {
        return e.code();
    }
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool duplicate_free(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

} // namespace

TEST_CASE("division oracle spot values") {
    CHECK(phi_by_division(3, 2) == kPhi6);
    CHECK(phi_by_division(5, 3) == kPhi15);

    CHECK(phi_oracle(PrimePair(3, 2)) == kPhi6);
    CHECK(phi_oracle(PrimePair(5, 3)) == kPhi15);

    const SparsePoly phi21 = phi_oracle(PrimePair(7, 3));
    CHECK(phi21.degree() == 12);
    CHECK(eval_at_one(phi21) == 1);
    CHECK(phi21 == phi_by_division(7, 3));
}

TEST_CASE("closed form matches the division oracle") {
    CHECK(phi_closed_form(PrimePair(3, 2)) == kPhi6);
    CHECK(phi_closed_form(PrimePair(5, 3)) == kPhi15);
    CHECK(phi_closed_form(PrimePair(7, 5)) == phi_oracle(PrimePair(7, 5)));
}

TEST_CASE("lenstra construction matches the division oracle") {
    CHECK(phi_lenstra(PrimePair(3, 2)) == kPhi6);
    CHECK(phi_lenstra(PrimePair(5, 3)) == kPhi15);
}

TEST_CASE("lenstra exponent sets for (5,3), brute-forced") {
    // lambda = 2 and mu = 2 found by exhaustive inverse search
    std::uint64_t lambda = 0, mu = 0;
    for (std::uint64_t c = 1; c < 3; ++c)
        if (c * 5 % 3 == 1)
            lambda = c;
    for (std::uint64_t c = 1; c < 5; ++c)
        if (c * 3 % 5 == 1)
            mu = c;
    REQUIRE(lambda == 2);
    REQUIRE(mu == 2);

    std::vector<std::uint64_t> pos, neg;
    for (std::uint64_t i = 0; i < lambda; ++i)
        for (std::uint64_t j = 0; j < mu; ++j)
            pos.push_back(i * 5 + j * 3);
    for (std::uint64_t i = lambda; i < 3; ++i)
        for (std::uint64_t j = mu; j < 5; ++j)
            neg.push_back(i * 5 + j * 3 - 15);

    const ExponentSets sets = lenstra_exponents(PrimePair(5, 3));
    CHECK(sorted(sets.positive) == sorted(pos));
    CHECK(sorted(sets.negative) == sorted(neg));
    CHECK(sorted(sets.positive) == std::vector<std::uint64_t>{0, 3, 5, 8});
    CHECK(sorted(sets.negative) == std::vector<std::uint64_t>{1, 4, 7});
}

TEST_CASE("lam-leung construction matches the division oracle") {
    CHECK(phi_lam_leung(PrimePair(3, 2)) == kPhi6);
    CHECK(phi_lam_leung(PrimePair(5, 3)) == kPhi15);
}

TEST_CASE("the two summation formulas generate identical exponent multisets") {
    const auto pairs = prime_pairs(300);
    REQUIRE(!pairs.empty());
    for (const auto &pair : pairs) {
        CAPTURE(pair.p());
        CAPTURE(pair.q());
        const ExponentSets lenstra = lenstra_exponents(pair);
        const ExponentSets lam_leung = lam_leung_exponents(pair);
        CHECK(sorted(lenstra.positive) == sorted(lam_leung.positive));
        CHECK(sorted(lenstra.negative) == sorted(lam_leung.negative));
        CHECK(duplicate_free(lenstra.positive));
        CHECK(duplicate_free(lenstra.negative));
    }
}

TEST_CASE("four-way agreement for every pair with pq <= 300") {
    for (const auto &pair : prime_pairs(300)) {
        CAPTURE(pair.p());
        CAPTURE(pair.q());
        const SparsePoly oracle = phi_oracle(pair);
        CHECK(phi_closed_form(pair) == oracle);
        CHECK(phi_lenstra(pair) == oracle);
        CHECK(phi_lam_leung(pair) == oracle);
    }
}

TEST_CASE("phi dispatch and capacity guard") {
    const PrimePair pair(5, 3);
    CHECK(phi(pair, PhiMethod::closed) == kPhi15);
    CHECK(phi(pair, PhiMethod::lenstra) == kPhi15);
    CHECK(phi(pair, PhiMethod::lam_leung) == kPhi15);
    CHECK(phi(pair, PhiMethod::oracle) == kPhi15);

    const PrimePair too_big(65537, 257); // product above kMaxProduct
    CHECK(thrown_code([&] { phi_closed_form(too_big); }) == errc::capacity);
    CHECK(thrown_code([&] { phi_oracle(too_big); }) == errc::capacity);
}

TEST_CASE("lemma_expand examples") {
    CHECK(lemma_expand(CoprimePair(3, 2), 0) == SparsePoly::one());
    CHECK(lemma_expand(CoprimePair(3, 2), 1) == SparsePoly::monomial(3));
    CHECK(lemma_expand(CoprimePair(5, 3), 2) == SparsePoly::monomial(10));
}

TEST_CASE("lemma identity for all coprime a > b with ab <= 100") {
    std::size_t checked = 0;
    for (std::uint64_t b = 1; b <= 100; ++b) {
        for (std::uint64_t a = b + 1; a * b <= 100; ++a) {
            if (gcd(a, b) != 1)
                continue;
            const CoprimePair pair(a, b);
            for (std::uint64_t i = 0; i < b; ++i) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(i);
                CHECK(lemma_expand(pair, i) == SparsePoly::monomial(a * i));
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("lemma identity also holds past the range the factorization uses") {
    for (std::uint64_t i : {3, 5, 9})
        CHECK(lemma_expand(CoprimePair(5, 3), i) ==
              SparsePoly::monomial(5 * i));
    CHECK(lemma_expand(CoprimePair(7, 2), 6) == SparsePoly::monomial(42));
    CHECK(lemma_expand(CoprimePair(7, 1), 3) == SparsePoly::monomial(21));
}

TEST_CASE("factorization of X^6 - 1") {
    const FactorizationResult result = factor_x_ab_minus_1(CoprimePair(3, 2));
    CHECK(result.linear == P({{1, 1}, {0, -1}}));
    CHECK(result.geom_a == P({{2, 1}, {1, 1}, {0, 1}}));
    CHECK(result.geom_b == P({{1, 1}, {0, 1}}));
    CHECK(result.core == kPhi6);
    CHECK_FALSE(result.swapped);
    CHECK(result.linear * result.geom_a * result.geom_b * result.core ==
          x_pow_minus_one(6));
}

TEST_CASE("factorization degenerates cleanly at b = 1") {
    for (std::uint64_t a : {2, 5, 9}) {
        const FactorizationResult result =
            factor_x_ab_minus_1(CoprimePair(a, 1));
        CHECK(result.geom_b == SparsePoly::one());
        CHECK(result.core == SparsePoly::one());
        CHECK(result.linear * result.geom_a == x_pow_minus_one(a));
    }
}

TEST_CASE("factorization of X^20 - 1") {
    const FactorizationResult result = factor_x_ab_minus_1(CoprimePair(5, 4));
    CHECK(result.linear * result.geom_a * result.geom_b * result.core ==
          x_pow_minus_one(20));
    CHECK(eval_at_one(result.core) == 1);
}

TEST_CASE("swapped inputs factor identically and report the swap") {
    const FactorizationResult fwd = factor_x_ab_minus_1(CoprimePair(3, 2));
    const FactorizationResult rev = factor_x_ab_minus_1(CoprimePair(2, 3));
    CHECK(rev.swapped);
    CHECK(rev.linear == fwd.linear);
    CHECK(rev.geom_a == fwd.geom_a);
    CHECK(rev.geom_b == fwd.geom_b);
    CHECK(rev.core == fwd.core);
}

TEST_CASE("factorization capacity guard") {
    CHECK(thrown_code([] { factor_x_ab_minus_1(CoprimePair(65537, 257)); }) ==
          errc::capacity);
}

TEST_CASE("core factor equals phi when a and b are prime") {
    for (const auto &[p, q] :
         std::initializer_list<std::pair<std::uint64_t, std::uint64_t>>{
             {3, 2}, {5, 3}, {7, 5}, {13, 11}}) {
        const FactorizationResult result =
            factor_x_ab_minus_1(CoprimePair(p, q));
        CHECK(result.core == phi_closed_form(PrimePair(p, q)));
    }
}

TEST_CASE("verify_pair reports all checks green") {
    const VerificationReport r32 = verify_pair(PrimePair(3, 2));
    CHECK(r32.passed());
    CHECK(r32.methods_agree);
    CHECK(r32.coeffs_in_unit_set);
    CHECK(r32.degree_ok);
    CHECK(r32.palindrome_ok);
    CHECK(r32.eval_one_ok);
    CHECK(r32.failures.empty());

    const VerificationReport r53 = verify_pair(PrimePair(5, 3));
    CHECK(r53.passed());
    CHECK(r53.params == ReductionParams{2, 2, 1, 1});

    const VerificationReport big = verify_pair(PrimePair(13, 11));
    CHECK(big.passed());
    CHECK(phi_oracle(PrimePair(13, 11)).degree() == 120);
}

TEST_CASE("verify_pair precondition: capacity") {
    CHECK(thrown_code([] { verify_pair(PrimePair(65537, 257)); }) ==
          errc::capacity);
}

TEST_CASE("pair enumeration order") {
    const auto single = prime_pairs(6);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == PrimePair(3, 2));

    const auto pairs = prime_pairs(15);
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0] == PrimePair(3, 2));
    CHECK(pairs[1] == PrimePair(5, 2));
    CHECK(pairs[2] == PrimePair(7, 2));
    CHECK(pairs[3] == PrimePair(5, 3));
}

TEST_CASE("sweep") {
    CHECK(thrown_code([] { sweep(5); }) == errc::invalid_argument);

    const auto one = sweep(6);
    REQUIRE(one.size() == 1);
    CHECK(one[0].pair == PrimePair(3, 2));
    CHECK(one[0].passed());

    const auto hundred = sweep(100);
    CHECK(hundred.size() == 30);
    for (const auto &report : hundred) {
        CAPTURE(report.pair.p());
        CAPTURE(report.pair.q());
        CHECK(report.passed());
        CHECK(report.failures.empty());
    }
}

TEST_CASE("concurrent sweep returns the order and content of the serial one") {
    const auto serial = sweep(300, 1);
    const auto parallel = sweep(300, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].pair == parallel[i].pair);
        CHECK(serial[i].passed() == parallel[i].passed());
        CHECK(serial[i].params == parallel[i].params);
        CHECK(serial[i].failures == parallel[i].failures);
    }
}
