#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace unionvals {

// All worths and payoffs are exact rationals, kept in lowest terms with a
// positive denominator. No operation in the library ever rounds.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses "p", "-p" or "p/q" with q > 0. Digits only, no whitespace, no
// leading '+'. Throws Error(ValidationError) on anything else.
Rational parse_rational(std::string_view text);

// Lowest-terms rendering, "p" or "p/q". Inverse of parse_rational.
std::string to_string(const Rational& value);

} // namespace unionvals
