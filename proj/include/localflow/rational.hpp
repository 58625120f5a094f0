#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace localflow {

// Exact rational used for averaged flows, tester estimates and the tick
// quantum. Overflow is an error in boost::rational only for the normalizing
// gcd steps; every quantity in this library stays far below 2^62.
using Rational = boost::rational<std::int64_t>;

// Parses "p/q" or a plain integer "p". Throws InputError on malformed text or
// a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& value);

// Fixed-point rendering with `digits` fractional digits, rounded half away
// from zero.
std::string to_decimal(const Rational& value, int digits = 12);

// Smallest integer >= value.
std::int64_t ceil(const Rational& value);

}  // namespace localflow
