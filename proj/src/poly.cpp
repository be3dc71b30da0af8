#include "poly.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace binphi {

SparsePoly SparsePoly::from_terms(std::span<const Term> terms) {
    std::vector<Term> sorted(terms.begin(), terms.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const Term &a, const Term &b) { return a.exp < b.exp; });
    std::vector<Term> merged;
    merged.reserve(sorted.size());
    for (const Term &t : sorted) {
        if (!merged.empty() && merged.back().exp == t.exp)
            merged.back().coeff = checked_add(merged.back().coeff, t.coeff);
        else
            merged.push_back(t);
        if (merged.back().coeff == 0)
            merged.pop_back();
    }
    return SparsePoly(std::move(merged), canonical_tag{});
}

SparsePoly SparsePoly::from_terms(std::initializer_list<Term> terms) {
    return from_terms(std::span<const Term>(terms.begin(), terms.size()));
}

SparsePoly SparsePoly::monomial(std::uint64_t exp, std::int64_t coeff) {
    if (coeff == 0)
        return {};
    return SparsePoly({{exp, coeff}}, canonical_tag{});
}

SparsePoly operator+(const SparsePoly &f, const SparsePoly &g) {
    std::vector<SparsePoly::Term> out;
    out.reserve(f.terms_.size() + g.terms_.size());
    auto fi = f.terms_.begin(), fe = f.terms_.end();
    auto gi = g.terms_.begin(), ge = g.terms_.end();
    while (fi != fe || gi != ge) {
        if (gi == ge || (fi != fe && fi->exp < gi->exp)) {
            out.push_back(*fi++);
        } else if (fi == fe || gi->exp < fi->exp) {
            out.push_back(*gi++);
        } else {
            const std::int64_t c = checked_add(fi->coeff, gi->coeff);
            if (c != 0)
                out.push_back({fi->exp, c});
            ++fi;
            ++gi;
        }
    }
    return SparsePoly(std::move(out), SparsePoly::canonical_tag{});
}

SparsePoly operator-(const SparsePoly &f, const SparsePoly &g) {
    std::vector<SparsePoly::Term> out;
    out.reserve(f.terms_.size() + g.terms_.size());
    auto fi = f.terms_.begin(), fe = f.terms_.end();
    auto gi = g.terms_.begin(), ge = g.terms_.end();
    while (fi != fe || gi != ge) {
        if (gi == ge || (fi != fe && fi->exp < gi->exp)) {
            out.push_back(*fi++);
        } else if (fi == fe || gi->exp < fi->exp) {
            out.push_back({gi->exp, checked_sub(0, gi->coeff)});
            ++gi;
        } else {
            const std::int64_t c = checked_sub(fi->coeff, gi->coeff);
            if (c != 0)
                out.push_back({fi->exp, c});
            ++fi;
            ++gi;
        }
    }
    return SparsePoly(std::move(out), SparsePoly::canonical_tag{});
}

SparsePoly operator*(const SparsePoly &f, const SparsePoly &g) {
    if (f.is_zero() || g.is_zero())
        return {};
    // Map accumulation keeps memory proportional to the result, which
    // matters for telescoping products like (X-1) * (1+...+X^(n-1)).
    std::map<std::uint64_t, std::int64_t> acc;
    for (const auto &ft : f.terms_) {
        for (const auto &gt : g.terms_) {
            const std::uint64_t e = checked_exp_add(ft.exp, gt.exp);
            const std::int64_t c = checked_mul(ft.coeff, gt.coeff);
            auto [it, inserted] = acc.try_emplace(e, c);
            if (!inserted) {
                it->second = checked_add(it->second, c);
                if (it->second == 0)
                    acc.erase(it);
            }
        }
    }
    std::vector<SparsePoly::Term> out;
    out.reserve(acc.size());
    for (const auto &[e, c] : acc)
        out.push_back({e, c});
    return SparsePoly(std::move(out), SparsePoly::canonical_tag{});
}

SparsePoly exact_div(const SparsePoly &f, const SparsePoly &g) {
    if (g.is_zero())
        fail(errc::invalid_argument, "exact_div: divisor is zero");
    if (f.is_zero())
        return {};

    std::map<std::uint64_t, std::int64_t> rem;
    for (const auto &t : f.terms())
        rem.emplace(t.exp, t.coeff);
    const auto &divisor = g.terms();
    const SparsePoly::Term lead = divisor.back();

    std::vector<SparsePoly::Term> quotient;
    while (!rem.empty()) {
        const auto [rexp, rcoeff] = *rem.rbegin();
        if (rexp < lead.exp || rcoeff % lead.coeff != 0)
            fail(errc::inexact_division,
                 "exact_div: division leaves a remainder");
        const std::uint64_t qexp = rexp - lead.exp;
        const std::int64_t qcoeff = rcoeff / lead.coeff;
        quotient.push_back({qexp, qcoeff});
        for (const auto &t : divisor) {
            const std::uint64_t e = qexp + t.exp; // <= rexp, cannot wrap
            const std::int64_t delta = checked_mul(qcoeff, t.coeff);
            auto it = rem.find(e);
            if (it == rem.end()) {
                rem.emplace(e, checked_sub(0, delta));
            } else {
                it->second = checked_sub(it->second, delta);
                if (it->second == 0)
                    rem.erase(it);
            }
        }
    }
    // Quotient terms were produced in strictly descending exponent order.
    std::reverse(quotient.begin(), quotient.end());
    return SparsePoly::from_terms(quotient);
}

std::int64_t eval_at_one(const SparsePoly &f) {
    std::int64_t sum = 0;
    for (const auto &t : f.terms())
        sum = checked_add(sum, t.coeff);
    return sum;
}

SparsePoly geometric_sum(std::uint64_t n) {
    if (n == 0)
        fail(errc::invalid_argument, "geometric_sum: n must be >= 1");
    if (n > kTermBudget)
        fail(errc::capacity, "geometric_sum: n exceeds the term budget");
    std::vector<SparsePoly::Term> terms;
    terms.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i)
        terms.push_back({i, 1});
    return SparsePoly::from_terms(terms);
}

SparsePoly x_pow_minus_one(std::uint64_t n) {
    if (n == 0)
        return {};
    return SparsePoly::from_terms({{0, -1}, {n, 1}});
}

std::vector<std::int64_t> to_dense(const SparsePoly &f,
                                   std::uint64_t max_degree_cap) {
    const std::uint64_t deg = f.degree();
    if (deg > max_degree_cap)
        fail(errc::capacity, "to_dense: degree " + std::to_string(deg) +
                                 " exceeds cap " +
                                 std::to_string(max_degree_cap));
    if (deg + 1 > kTermBudget)
        fail(errc::capacity, "to_dense: degree exceeds the term budget");
    std::vector<std::int64_t> dense(static_cast<std::size_t>(deg) + 1, 0);
    for (const auto &t : f.terms())
        dense[static_cast<std::size_t>(t.exp)] = t.coeff;
    return dense;
}

} // namespace binphi
