#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace partition_gf {

/// Arbitrary-precision signed integer used for every coefficient and count.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational with Integer numerator and denominator, always reduced.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Integer& value) { return value.str(); }

/// Renders a rational as "p/q", or just "p" when the denominator is 1.
inline std::string to_decimal(const Rational& value)
{
    const Integer& den = boost::multiprecision::denominator(value);
    if (den == 1)
        return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

inline Integer binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace partition_gf
