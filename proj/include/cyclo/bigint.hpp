#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclo {

/// Arbitrary-precision signed integer, the escalation lane for coefficients.
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

/// Internal control-flow signal: a machine-word operation would have
/// overflowed. Callers redo the whole polynomial operation in BigInt.
struct Int64Overflow {};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}

/// |v| as an unsigned value; correct for INT64_MIN.
inline std::uint64_t abs_u64(std::int64_t v) {
    const auto u = static_cast<std::uint64_t>(v);
    return v < 0 ? ~u + 1 : u;
}

}  // namespace detail
}  // namespace cyclo
