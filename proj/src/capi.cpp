#include "binphi.h"

#include <cstdio>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "cyclotomic.hpp"
#include "errors.hpp"

struct binphi_poly {
    binphi::SparsePoly value;
};

namespace {

thread_local std::string t_last_error;

binphi_status to_status(binphi::errc code) noexcept {
    switch (code) {
    case binphi::errc::invalid_argument:
        return BINPHI_ERR_INVALID;
    case binphi::errc::overflow:
        return BINPHI_ERR_OVERFLOW;
    case binphi::errc::capacity:
        return BINPHI_ERR_CAPACITY;
    case binphi::errc::inexact_division:
        return BINPHI_ERR_INEXACT;
    case binphi::errc::invariant:
        return BINPHI_ERR_INVARIANT;
    }
    return BINPHI_ERR_INVARIANT;
}

template <class Fn> binphi_status guarded(Fn &&fn) noexcept {
    try {
        fn();
        return BINPHI_OK;
    } catch (const binphi::error &e) {
        t_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        t_last_error = "out of memory";
        return BINPHI_ERR_CAPACITY;
    } catch (const std::exception &e) {
        t_last_error = e.what();
        return BINPHI_ERR_INVARIANT;
    }
}

binphi_status null_arg() noexcept {
    try {
        t_last_error = "null pointer argument";
    } catch (...) {
    }
    return BINPHI_ERR_NULLPTR;
}

binphi_poly *wrap(binphi::SparsePoly value) {
    return new binphi_poly{std::move(value)};
}

void fill_report(const binphi::VerificationReport &src, binphi_report &dst) {
    dst.p = src.pair.p();
    dst.q = src.pair.q();
    dst.methods_agree = src.methods_agree;
    dst.coeffs_in_unit_set = src.coeffs_in_unit_set;
    dst.degree_ok = src.degree_ok;
    dst.palindrome_ok = src.palindrome_ok;
    dst.eval_one_ok = src.eval_one_ok;
    dst.ok = src.passed();
    dst.params = {src.params.lambda, src.params.mu, src.params.r,
                  src.params.s};
    std::string joined;
    for (const auto &f : src.failures) {
        if (!joined.empty())
            joined += "; ";
        joined += f;
    }
    std::snprintf(dst.failures, sizeof(dst.failures), "%s", joined.c_str());
}

} // namespace

extern "C" {

const char *binphi_version(void) { return "1.0.0"; }

const char *binphi_status_str(binphi_status st) {
    switch (st) {
    case BINPHI_OK:
        return "ok";
    case BINPHI_ERR_INVALID:
        return "invalid argument";
    case BINPHI_ERR_OVERFLOW:
        return "arithmetic overflow";
    case BINPHI_ERR_CAPACITY:
        return "capacity exceeded";
    case BINPHI_ERR_INEXACT:
        return "inexact division";
    case BINPHI_ERR_INVARIANT:
        return "invariant violation";
    case BINPHI_ERR_NULLPTR:
        return "null pointer argument";
    }
    return "unknown status";
}

const char *binphi_last_error(void) { return t_last_error.c_str(); }

uint64_t binphi_gcd(uint64_t a, uint64_t b) { return binphi::gcd(a, b); }

int binphi_is_prime(uint64_t n) { return binphi::is_prime(n) ? 1 : 0; }

binphi_status binphi_mod_pow(uint64_t base, uint64_t exp, uint64_t modulus,
                             uint64_t *out) {
    if (!out)
        return null_arg();
    return guarded([&] { *out = binphi::mod_pow(base, exp, modulus); });
}

binphi_status binphi_reduction_params(uint64_t p, uint64_t q,
                                      binphi_params *out) {
    if (!out)
        return null_arg();
    return guarded([&] {
        const auto params = binphi::reduction_params(binphi::PrimePair(p, q));
        *out = {params.lambda, params.mu, params.r, params.s};
    });
}

binphi_status binphi_poly_from_terms(const uint64_t *exps,
                                     const int64_t *coeffs, size_t count,
                                     binphi_poly **out) {
    if (!out || (count > 0 && (!exps || !coeffs)))
        return null_arg();
    return guarded([&] {
        std::vector<binphi::SparsePoly::Term> terms;
        terms.reserve(count);
        for (size_t i = 0; i < count; ++i)
            terms.push_back({exps[i], coeffs[i]});
        *out = wrap(binphi::SparsePoly::from_terms(terms));
    });
}

binphi_status binphi_poly_geometric_sum(uint64_t n, binphi_poly **out) {
    if (!out)
        return null_arg();
    return guarded([&] { *out = wrap(binphi::geometric_sum(n)); });
}

void binphi_poly_free(binphi_poly *f) { delete f; }

size_t binphi_poly_term_count(const binphi_poly *f) {
    return f ? f->value.term_count() : 0;
}

binphi_status binphi_poly_term(const binphi_poly *f, size_t index,
                               uint64_t *exp, int64_t *coeff) {
    if (!f || !exp || !coeff)
        return null_arg();
    if (index >= f->value.term_count()) {
        t_last_error = "term index out of range";
        return BINPHI_ERR_INVALID;
    }
    const auto &term = f->value.terms()[index];
    *exp = term.exp;
    *coeff = term.coeff;
    return BINPHI_OK;
}

uint64_t binphi_poly_degree(const binphi_poly *f) {
    return f ? f->value.degree() : 0;
}

int binphi_poly_is_zero(const binphi_poly *f) {
    return !f || f->value.is_zero() ? 1 : 0;
}

int binphi_poly_equal(const binphi_poly *f, const binphi_poly *g) {
    if (!f || !g)
        return f == g ? 1 : 0;
    return f->value == g->value ? 1 : 0;
}

binphi_status binphi_poly_add(const binphi_poly *f, const binphi_poly *g,
                              binphi_poly **out) {
    if (!f || !g || !out)
        return null_arg();
    return guarded([&] { *out = wrap(f->value + g->value); });
}

binphi_status binphi_poly_sub(const binphi_poly *f, const binphi_poly *g,
                              binphi_poly **out) {
    if (!f || !g || !out)
        return null_arg();
    return guarded([&] { *out = wrap(f->value - g->value); });
}

binphi_status binphi_poly_mul(const binphi_poly *f, const binphi_poly *g,
                              binphi_poly **out) {
    if (!f || !g || !out)
        return null_arg();
    return guarded([&] { *out = wrap(f->value * g->value); });
}

binphi_status binphi_poly_exact_div(const binphi_poly *f,
                                    const binphi_poly *g, binphi_poly **out) {
    if (!f || !g || !out)
        return null_arg();
    return guarded([&] { *out = wrap(binphi::exact_div(f->value, g->value)); });
}

binphi_status binphi_poly_eval_at_one(const binphi_poly *f, int64_t *out) {
    if (!f || !out)
        return null_arg();
    return guarded([&] { *out = binphi::eval_at_one(f->value); });
}

binphi_status binphi_poly_to_dense(const binphi_poly *f,
                                   uint64_t max_degree_cap,
                                   int64_t **out_coeffs, size_t *out_len) {
    if (!f || !out_coeffs || !out_len)
        return null_arg();
    return guarded([&] {
        const auto dense = binphi::to_dense(f->value, max_degree_cap);
        auto buffer = std::make_unique<int64_t[]>(dense.size());
        std::memcpy(buffer.get(), dense.data(),
                    dense.size() * sizeof(int64_t));
        *out_len = dense.size();
        *out_coeffs = buffer.release();
    });
}

void binphi_dense_free(int64_t *coeffs) { delete[] coeffs; }

binphi_status binphi_phi(uint64_t p, uint64_t q, binphi_method method,
                         binphi_poly **out) {
    if (!out)
        return null_arg();
    return guarded([&] {
        binphi::PhiMethod m;
        switch (method) {
        case BINPHI_METHOD_CLOSED:
            m = binphi::PhiMethod::closed;
            break;
        case BINPHI_METHOD_LENSTRA:
            m = binphi::PhiMethod::lenstra;
            break;
        case BINPHI_METHOD_LAMLEUNG:
            m = binphi::PhiMethod::lam_leung;
            break;
        case BINPHI_METHOD_ORACLE:
            m = binphi::PhiMethod::oracle;
            break;
        default:
            binphi::fail(binphi::errc::invalid_argument,
                         "unknown construction method");
        }
        *out = wrap(binphi::phi(binphi::PrimePair(p, q), m));
    });
}

binphi_status binphi_lemma_expand(uint64_t a, uint64_t b, uint64_t i,
                                  binphi_poly **out) {
    if (!out)
        return null_arg();
    return guarded([&] {
        *out = wrap(binphi::lemma_expand(binphi::CoprimePair(a, b), i));
    });
}

binphi_status binphi_factor_x_ab_minus_1(uint64_t a, uint64_t b,
                                         binphi_poly **linear,
                                         binphi_poly **geom_a,
                                         binphi_poly **geom_b,
                                         binphi_poly **core, int *swapped) {
    if (!linear || !geom_a || !geom_b || !core)
        return null_arg();
    return guarded([&] {
        auto result = binphi::factor_x_ab_minus_1(binphi::CoprimePair(a, b));
        auto l = std::unique_ptr<binphi_poly>(wrap(std::move(result.linear)));
        auto ga = std::unique_ptr<binphi_poly>(wrap(std::move(result.geom_a)));
        auto gb = std::unique_ptr<binphi_poly>(wrap(std::move(result.geom_b)));
        auto c = std::unique_ptr<binphi_poly>(wrap(std::move(result.core)));
        if (swapped)
            *swapped = result.swapped ? 1 : 0;
        *linear = l.release();
        *geom_a = ga.release();
        *geom_b = gb.release();
        *core = c.release();
    });
}

binphi_status binphi_verify_pair(uint64_t p, uint64_t q, binphi_report *out) {
    if (!out)
        return null_arg();
    return guarded([&] {
        fill_report(binphi::verify_pair(binphi::PrimePair(p, q)), *out);
    });
}

binphi_status binphi_sweep(uint64_t max_product, unsigned jobs,
                           binphi_report **out_reports, size_t *out_count) {
    if (!out_reports || !out_count)
        return null_arg();
    return guarded([&] {
        const auto reports = binphi::sweep(max_product, jobs);
        auto buffer = std::make_unique<binphi_report[]>(reports.size());
        for (std::size_t i = 0; i < reports.size(); ++i)
            fill_report(reports[i], buffer[i]);
        *out_count = reports.size();
        *out_reports = buffer.release();
    });
}

void binphi_reports_free(binphi_report *reports) { delete[] reports; }

binphi_status binphi_prime_pairs(uint64_t max_product, uint64_t **out_pairs,
                                 size_t *out_pair_count) {
    if (!out_pairs || !out_pair_count)
        return null_arg();
    return guarded([&] {
        if (max_product < 6)
            binphi::fail(binphi::errc::invalid_argument,
                         "max_product must be >= 6");
        const auto pairs = binphi::prime_pairs(max_product);
        auto buffer = std::make_unique<uint64_t[]>(pairs.size() * 2);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            buffer[2 * i] = pairs[i].p();
            buffer[2 * i + 1] = pairs[i].q();
        }
        *out_pair_count = pairs.size();
        *out_pairs = buffer.release();
    });
}

void binphi_pairs_free(uint64_t *pairs) { delete[] pairs; }

} // extern "C"
