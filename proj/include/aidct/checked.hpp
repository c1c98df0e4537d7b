#pragma once

#include <cstdint>
#include <stdexcept>

namespace aidct {

// Overflow-checked signed 64-bit arithmetic. Coordinate overflow is a hard
// error: the transform is only claimed exact while bit growth stays in range.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("aidct: 64-bit add overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("aidct: 64-bit sub overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("aidct: 64-bit mul overflow");
    return r;
}

inline std::int64_t checked_shl(std::int64_t a, int k) {
    if (k < 0 || k > 62) throw std::invalid_argument("aidct: shift amount out of range");
    return checked_mul(a, std::int64_t{1} << k);
}

inline std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

}  // namespace aidct
