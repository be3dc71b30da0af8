#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace binphi {

enum class errc {
    invalid_argument,
    overflow,
    capacity,
    inexact_division,
    invariant,
};

class error : public std::runtime_error {
  public:
    error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, std::string message) {
    throw error(code, std::move(message));
}

// Checked 64-bit arithmetic: wraparound is reported, never silent.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        fail(errc::overflow, "coefficient overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        fail(errc::overflow, "coefficient overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(errc::overflow, "coefficient overflow in multiplication");
    return r;
}

inline std::uint64_t checked_exp_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        fail(errc::overflow, "exponent overflow in addition");
    return r;
}

inline std::uint64_t checked_exp_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(errc::overflow, "exponent overflow in multiplication");
    return r;
}

} // namespace binphi
