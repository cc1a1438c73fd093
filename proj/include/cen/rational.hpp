#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace cen {

/// Exact fraction; always in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// "num/den", including "0/1" and "3/1".
std::string to_string(const Rational& r);

/// "num/den", or just "num" for integers.
std::string format_fraction(const Rational& r);

/// Rounded to `places` decimals (half away from zero), trailing zeros dropped.
std::string format_decimal(const Rational& r, int places = 3);

/// Fraction when the denominator is at most 99, otherwise 3 decimals.
std::string format_probability(const Rational& r);

/// Inverse of to_string / format_fraction. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

} // namespace cen
