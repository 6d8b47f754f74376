#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kwalls {

/// Exact rational used for every charge, bound and wall value.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

/// Largest integer not exceeding x.
std::int64_t floor_to_int(const Rational& x);

/// Smallest integer not below x.
std::int64_t ceil_to_int(const Rational& x);

/// Lowest-terms "p/q" with q > 0; integers keep the "/1" suffix.
std::string to_fraction_string(const Rational& x);

/// Accepts "p/q" or a bare integer. Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// sqrt(x) rendered with a fixed number of decimals. x must be non-negative.
std::string sqrt_decimal(const Rational& x, int digits);

/// x rendered with a fixed number of decimals.
std::string to_decimal(const Rational& x, int digits);

double to_double(const Rational& x);

}  // namespace kwalls
