#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace frobsum {

/// Arbitrary-precision integer used for every multiplicity and dimension.
using BigInt = boost::multiprecision::cpp_int;
/// Exact rationals, used only where a division can occur (series inversion).
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline std::string to_decimal(const Rational& v)
{
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

/// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/// Row of binomials C(n, 0..n), cheaper than repeated binomial() calls.
inline std::vector<BigInt> binomial_row(std::int64_t n)
{
    std::vector<BigInt> row(static_cast<std::size_t>(n + 1));
    row[0] = 1;
    for (std::int64_t k = 1; k <= n; ++k) {
        row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
    }
    return row;
}

inline BigInt ipow(std::int64_t base, std::int64_t exp)
{
    BigInt r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r *= base;
    return r;
}

/// ceil(a / b) for b > 0 and any sign of a.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

/// Mathematical modulus, result in [0, m).
constexpr std::int64_t pmod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace frobsum
