#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace josnim::checked {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("uint64 addition overflow");
    return r;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
    if (b > a) throw std::overflow_error("uint64 subtraction underflow");
    return a - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("uint64 multiplication overflow");
    return r;
}

// 2^e, throwing when it does not fit.
inline std::uint64_t pow2(std::uint64_t e) {
    if (e >= 64) throw std::overflow_error("2^e does not fit in uint64");
    return std::uint64_t{1} << e;
}

inline std::int64_t to_signed(std::uint64_t a) {
    if (a > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("value does not fit in int64");
    return static_cast<std::int64_t>(a);
}

}  // namespace josnim::checked

namespace josnim {

// Floor division rounding toward negative infinity; b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

// floor(log2(v)) for v >= 1, via bit length.
constexpr unsigned floor_log2(std::uint64_t v) {
    return static_cast<unsigned>(std::bit_width(v)) - 1;
}

}  // namespace josnim
