#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace permpat {

/// Exact nonnegative copy count. Counts such as n^(alpha^2 k) outgrow any
/// machine word, so every count in the library is carried in this type.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_pow(const BigCount& base, std::uint64_t exponent)
{
    BigCount result = 1;
    BigCount square = base;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= square;
        exponent >>= 1U;
        if (exponent != 0)
            square *= square;
    }
    return result;
}

/// floor(sqrt(value)) for value >= 0.
inline BigCount isqrt(const BigCount& value)
{
    return boost::multiprecision::sqrt(value);
}

inline BigCount binomial(const BigCount& n, std::uint64_t k)
{
    if (n < k)
        return 0;
    BigCount result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

/// Smallest r >= 0 with r^degree >= value (degree >= 1).
inline BigCount iroot_ceil(const BigCount& value, std::uint64_t degree)
{
    if (value <= 1)
        return value;
    BigCount hi = 1;
    while (big_pow(hi, degree) < value)
        hi *= 2;
    BigCount lo = hi / 2;
    while (lo < hi) {
        BigCount mid = (lo + hi) / 2;
        if (big_pow(mid, degree) >= value)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

inline std::string to_decimal(const BigCount& value)
{
    return value.str();
}

/// Parses a nonnegative decimal integer; throws std::invalid_argument.
BigCount parse_decimal(std::string_view text);

} // namespace permpat
