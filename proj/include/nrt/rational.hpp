#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace nrt {

// Exact arbitrary-precision arithmetic. Enumerator coefficients reach
// q^(mn/2) and intermediate rewrite systems square them, so fixed-width
// integers are not an option anywhere in this library.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "n" for integers, "n/d" otherwise, with d > 0 and
// gcd(|n|, d) = 1 (the backend keeps rationals normalized).
std::string rat_str(const Rational& r);

// Strict inverse of rat_str: optional sign, digits, optional "/digits".
// Throws ParseError on malformed input, DivisionByZero on a zero denominator.
Rational rat_parse(std::string_view s);

BigInt big_pow(BigInt base, unsigned exp);

}  // namespace nrt
