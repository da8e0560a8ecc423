#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace circramsey {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest integer not above q.
BigInt floor(const Rational& q);

/// q - floor(q), always in [0, 1).
Rational frac(const Rational& q);

/// q reduced into [0, period).
Rational mod(const Rational& q, const Rational& period);

/// Parses "p/q", "p" or "-p/q".
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace circramsey
