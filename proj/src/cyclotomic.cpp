#include "cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include "errors.hpp"

namespace binphi {

namespace {

void check_capacity(std::uint64_t product) {
    if (product > kMaxProduct)
        fail(errc::capacity, "product " + std::to_string(product) +
                                 " exceeds the supported capacity " +
                                 std::to_string(kMaxProduct));
}

std::vector<SparsePoly::Term> unit_terms(const ExponentSets &sets) {
    std::vector<SparsePoly::Term> terms;
    terms.reserve(sets.positive.size() + sets.negative.size());
    for (std::uint64_t e : sets.positive)
        terms.push_back({e, 1});
    for (std::uint64_t e : sets.negative)
        terms.push_back({e, -1});
    return terms;
}

bool has_duplicate(std::vector<std::uint64_t> exps) {
    std::sort(exps.begin(), exps.end());
    return std::adjacent_find(exps.begin(), exps.end()) != exps.end();
}

bool intersects(std::vector<std::uint64_t> lhs, std::vector<std::uint64_t> rhs) {
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    auto li = lhs.begin();
    auto ri = rhs.begin();
    while (li != lhs.end() && ri != rhs.end()) {
        if (*li < *ri)
            ++li;
        else if (*ri < *li)
            ++ri;
        else
            return true;
    }
    return false;
}

// The floor-division double sum shared by the closed form and the core
// factor: sum_{i=0}^{b-1} sum_{j=1}^{floor(ai/b)} X^(ai - bj).
SparsePoly floor_sum(std::uint64_t a, std::uint64_t b) {
    std::vector<SparsePoly::Term> terms;
    for (std::uint64_t i = 0; i < b; ++i) {
        const std::uint64_t top = a * i / b;
        for (std::uint64_t j = 1; j <= top; ++j)
            terms.push_back({a * i - b * j, 1});
    }
    return SparsePoly::from_terms(terms);
}

bool palindromic(const SparsePoly &f) {
    const auto &ts = f.terms();
    if (ts.empty())
        return true;
    const std::uint64_t deg = f.degree();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto &lo = ts[i];
        const auto &hi = ts[ts.size() - 1 - i];
        if (lo.coeff != hi.coeff || lo.exp + hi.exp != deg)
            return false;
    }
    return true;
}

} // namespace

ExponentSets lenstra_exponents(const PrimePair &pair) {
    const std::uint64_t p = pair.p();
    const std::uint64_t q = pair.q();
    const std::uint64_t pq = pair.product();
    const auto [lambda, mu, r, s] = reduction_params(pair);

    ExponentSets sets;
    sets.positive.reserve(lambda * mu);
    for (std::uint64_t i = 0; i < lambda; ++i)
        for (std::uint64_t j = 0; j < mu; ++j)
            sets.positive.push_back(i * p + j * q);
    sets.negative.reserve((q - lambda) * (p - mu));
    for (std::uint64_t i = lambda; i < q; ++i) {
        for (std::uint64_t j = mu; j < p; ++j) {
            const std::uint64_t e = i * p + j * q;
            if (e < pq)
                fail(errc::invariant,
                     "negative exponent in the correction sum");
            sets.negative.push_back(e - pq);
        }
    }
    return sets;
}

ExponentSets lam_leung_exponents(const PrimePair &pair) {
    const std::uint64_t p = pair.p();
    const std::uint64_t q = pair.q();
    const std::uint64_t pq = pair.product();
    const auto [lambda, mu, r, s] = reduction_params(pair);

    ExponentSets sets;
    sets.positive.reserve((r + 1) * (s + 1));
    for (std::uint64_t i = 0; i <= r; ++i)
        for (std::uint64_t j = 0; j <= s; ++j)
            sets.positive.push_back(i * p + j * q);
    for (std::uint64_t i = r + 1; i < q; ++i) {
        for (std::uint64_t j = s + 1; j < p; ++j) {
            const std::uint64_t e = i * p + j * q;
            if (e < pq)
                fail(errc::invariant,
                     "negative exponent in the correction sum");
            sets.negative.push_back(e - pq);
        }
    }
    if (has_duplicate(sets.positive) || has_duplicate(sets.negative))
        fail(errc::invariant, "duplicate exponent within one sign class");
    if (intersects(sets.positive, sets.negative))
        fail(errc::invariant, "index sets are not disjoint");
    return sets;
}

SparsePoly phi_closed_form(const PrimePair &pair) {
    check_capacity(pair.product());
    const SparsePoly inner = floor_sum(pair.p(), pair.q());
    return SparsePoly::one() + x_pow_minus_one(1) * inner;
}

SparsePoly phi_lenstra(const PrimePair &pair) {
    check_capacity(pair.product());
    return SparsePoly::from_terms(unit_terms(lenstra_exponents(pair)));
}

SparsePoly phi_lam_leung(const PrimePair &pair) {
    check_capacity(pair.product());
    return SparsePoly::from_terms(unit_terms(lam_leung_exponents(pair)));
}

SparsePoly phi_oracle(const PrimePair &pair) {
    check_capacity(pair.product());
    const SparsePoly numerator =
        x_pow_minus_one(pair.product()) * x_pow_minus_one(1);
    const SparsePoly denominator =
        x_pow_minus_one(pair.p()) * x_pow_minus_one(pair.q());
    try {
        return exact_div(numerator, denominator);
    } catch (const error &e) {
        if (e.code() == errc::inexact_division)
            fail(errc::invariant,
                 "divisor-product identity violated: " + std::string(e.what()));
        throw;
    }
}

SparsePoly phi(const PrimePair &pair, PhiMethod method) {
    switch (method) {
    case PhiMethod::closed:
        return phi_closed_form(pair);
    case PhiMethod::lenstra:
        return phi_lenstra(pair);
    case PhiMethod::lam_leung:
        return phi_lam_leung(pair);
    case PhiMethod::oracle:
        return phi_oracle(pair);
    }
    fail(errc::invalid_argument, "unknown construction method");
}

SparsePoly lemma_expand(const CoprimePair &pair, std::uint64_t i) {
    const std::uint64_t a = pair.a();
    const std::uint64_t b = pair.b();
    const std::uint64_t ai = checked_exp_mul(a, i);
    const std::uint64_t top = ai / b;
    if (top > kTermBudget)
        fail(errc::capacity, "lemma_expand: sum exceeds the term budget");
    std::vector<SparsePoly::Term> sum;
    sum.reserve(top);
    for (std::uint64_t j = 1; j <= top; ++j)
        sum.push_back({ai - b * j, 1});
    return SparsePoly::monomial(ai % b) +
           x_pow_minus_one(b) * SparsePoly::from_terms(sum);
}

FactorizationResult factor_x_ab_minus_1(const CoprimePair &pair) {
    check_capacity(pair.product());
    const std::uint64_t a = pair.a();
    const std::uint64_t b = pair.b();

    FactorizationResult result;
    result.linear = x_pow_minus_one(1);
    result.geom_a = geometric_sum(a);
    result.geom_b = geometric_sum(b);
    result.core = SparsePoly::one() + result.linear * floor_sum(a, b);
    result.swapped = pair.swapped();

    const SparsePoly product =
        result.linear * result.geom_a * result.geom_b * result.core;
    if (product != x_pow_minus_one(pair.product()))
        fail(errc::invariant,
             "factor product does not reproduce X^(a*b) - 1");
    return result;
}

VerificationReport verify_pair(const PrimePair &pair) {
    VerificationReport report{pair};
    report.params = reduction_params(pair);

    const SparsePoly closed = phi_closed_form(pair);
    const SparsePoly lenstra = phi_lenstra(pair);
    const SparsePoly lam_leung = phi_lam_leung(pair);
    const SparsePoly oracle = phi_oracle(pair);

    report.methods_agree =
        closed == oracle && lenstra == oracle && lam_leung == oracle;
    if (!report.methods_agree)
        report.failures.emplace_back("methods disagree");

    const SparsePoly &value = oracle;
    report.coeffs_in_unit_set =
        std::all_of(value.terms().begin(), value.terms().end(),
                    [](const SparsePoly::Term &t) {
                        return t.coeff == 1 || t.coeff == -1;
                    });
    if (!report.coeffs_in_unit_set)
        report.failures.emplace_back("coefficient outside {-1,0,1}");

    report.degree_ok = value.degree() == (pair.p() - 1) * (pair.q() - 1);
    if (!report.degree_ok)
        report.failures.emplace_back("degree != (p-1)*(q-1)");

    report.palindrome_ok = palindromic(value);
    if (!report.palindrome_ok)
        report.failures.emplace_back("coefficients not palindromic");

    std::size_t plus = 0, minus = 0;
    for (const auto &t : value.terms())
        (t.coeff > 0 ? plus : minus) += 1;
    report.eval_one_ok = eval_at_one(value) == 1 && plus == minus + 1;
    if (!report.eval_one_ok)
        report.failures.emplace_back("evaluation at 1 is not 1");

    return report;
}

std::vector<PrimePair> prime_pairs(std::uint64_t max_product) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 2; n <= max_product / 2; ++n)
        if (is_prime(n))
            primes.push_back(n);

    std::vector<PrimePair> pairs;
    for (std::size_t qi = 0; qi < primes.size(); ++qi) {
        const std::uint64_t q = primes[qi];
        if (q > max_product / q)
            break;
        for (std::size_t pi = qi + 1; pi < primes.size(); ++pi) {
            const std::uint64_t p = primes[pi];
            if (p > max_product / q)
                break;
            pairs.emplace_back(p, q);
        }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const PrimePair &x, const PrimePair &y) {
                  if (x.product() != y.product())
                      return x.product() < y.product();
                  return x.q() < y.q();
              });
    return pairs;
}

std::vector<VerificationReport> sweep(std::uint64_t max_product,
                                      unsigned jobs) {
    if (max_product < 6)
        fail(errc::invalid_argument, "max_product must be >= 6");
    const std::vector<PrimePair> pairs = prime_pairs(max_product);
    std::vector<std::optional<VerificationReport>> slots(pairs.size());

    auto work = [&pairs, &slots](std::size_t idx) {
        const PrimePair &pair = pairs[idx];
        try {
            slots[idx] = verify_pair(pair);
        } catch (const std::exception &e) {
            VerificationReport report{pair};
            report.params = reduction_params(pair);
            report.failures.push_back(std::string("error: ") + e.what());
            slots[idx] = std::move(report);
        }
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            work(i);
    } else {
        std::atomic<std::size_t> next{0};
        const std::size_t thread_count =
            std::min<std::size_t>(jobs, std::max<std::size_t>(pairs.size(), 1));
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (std::size_t t = 0; t < thread_count; ++t) {
            pool.emplace_back([&next, &pairs, &work] {
                for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();)
                    work(i);
            });
        }
        for (auto &th : pool)
            th.join();
    }

    std::vector<VerificationReport> reports;
    reports.reserve(pairs.size());
    for (auto &slot : slots)
        reports.push_back(std::move(*slot));
    return reports;
}

} // namespace binphi
