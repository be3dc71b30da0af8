#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "binphi.h"

namespace cli {

/// Command-level failure, reported on stderr and mapped to exit code 1.
struct CliError {
    std::string message;
};

std::vector<std::pair<std::uint64_t, std::int64_t>>
poly_terms(const binphi_poly *f);

/// Ascending coefficient vector via the C API; throws CliError when the
/// degree exceeds max_degree.
std::vector<std::int64_t> dense_coeffs(const binphi_poly *f,
                                       std::uint64_t max_degree);

/// "[1, -1, 1]"
std::string render_dense(const binphi_poly *f, std::uint64_t max_degree);

/// "0:1 1:-1 2:1" (exp:coeff ascending); the zero polynomial renders as "0".
std::string render_sparse(const binphi_poly *f);

/// "X^{8} - X^{7} + X^{5} - X^{4} + X^{3} - X + 1"
std::string render_latex(const binphi_poly *f);

} // namespace cli
