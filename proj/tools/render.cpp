#include "render.hpp"

#include <sstream>

namespace cli {

std::vector<std::pair<std::uint64_t, std::int64_t>>
poly_terms(const binphi_poly *f) {
    std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
    const size_t count = binphi_poly_term_count(f);
    terms.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        std::uint64_t exp = 0;
        std::int64_t coeff = 0;
        binphi_poly_term(f, i, &exp, &coeff);
        terms.emplace_back(exp, coeff);
    }
    return terms;
}

std::vector<std::int64_t> dense_coeffs(const binphi_poly *f,
                                       std::uint64_t max_degree) {
    int64_t *coeffs = nullptr;
    size_t len = 0;
    const binphi_status st = binphi_poly_to_dense(f, max_degree, &coeffs, &len);
    if (st != BINPHI_OK)
        throw CliError{binphi_last_error()};
    std::vector<std::int64_t> dense(coeffs, coeffs + len);
    binphi_dense_free(coeffs);
    return dense;
}

std::string render_dense(const binphi_poly *f, std::uint64_t max_degree) {
    const auto dense = dense_coeffs(f, max_degree);
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (i)
            os << ", ";
        os << dense[i];
    }
    os << ']';
    return os.str();
}

std::string render_sparse(const binphi_poly *f) {
    const auto terms = poly_terms(f);
    if (terms.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i)
            os << ' ';
        os << terms[i].first << ':' << terms[i].second;
    }
    return os.str();
}

std::string render_latex(const binphi_poly *f) {
    auto terms = poly_terms(f);
    if (terms.empty())
        return "0";
    std::ostringstream os;
    // Descending exponents, unit coefficients elided, signs spaced.
    for (std::size_t k = terms.size(); k-- > 0;) {
        const auto [exp, coeff] = terms[k];
        const bool first = k + 1 == terms.size();
        if (first)
            os << (coeff < 0 ? "-" : "");
        else
            os << (coeff < 0 ? " - " : " + ");
        const std::uint64_t magnitude =
            coeff < 0 ? 0 - static_cast<std::uint64_t>(coeff)
                      : static_cast<std::uint64_t>(coeff);
        if (exp == 0) {
            os << magnitude;
        } else {
            if (magnitude != 1)
                os << magnitude;
            if (exp == 1)
                os << "X";
            else
                os << "X^{" << exp << "}";
        }
    }
    return os.str();
}

} // namespace cli
