#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kleinian {

// Arbitrary-precision integers and rationals. cpp_rational keeps itself
// canonical: gcd(num, den) = 1 and den > 0, which is exactly the Rational
// contract the rest of the library relies on for exact equality.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "a" when the denominator is 1, otherwise "a/b".
std::string rational_str(const Rational& q);

// Inverse of rational_str. Accepts an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace kleinian
