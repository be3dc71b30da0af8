#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "binphi.h"

namespace cli {

inline constexpr std::uint64_t kDefaultMaxDegree = 1000000;

struct PhiOptions {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::string method = "closed";
    std::string format = "dense";
    std::uint64_t max_degree = kDefaultMaxDegree;
};

struct FactorOptions {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::string format = "dense";
    std::uint64_t max_degree = kDefaultMaxDegree;
};

// Exit codes: 0 success, 1 input/validation error, 2 verification failure.
int run_phi(const PhiOptions &opt, std::ostream &out, std::ostream &err);
int run_factor(const FactorOptions &opt, std::ostream &out, std::ostream &err);
int run_params(std::uint64_t p, std::uint64_t q, std::ostream &out,
               std::ostream &err);
int run_verify(std::uint64_t max_pq, unsigned jobs, std::ostream &out,
               std::ostream &err);
int run_bench(std::uint64_t max_pq, unsigned reps, std::ostream &out,
              std::ostream &err);

/// One PASS/FAIL line per report plus a summary line; returns 2 when any
/// report failed, 0 otherwise.
int render_reports(const binphi_report *reports, std::size_t count,
                   std::ostream &out);

} // namespace cli
