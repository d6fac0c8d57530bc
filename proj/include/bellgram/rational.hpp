#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bellgram {

// Arbitrary-precision exact arithmetic. Every probability, expectation
// value and CHSH statistic in this library is one of these; doubles
// appear only in rendering.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(BigInt numerator, BigInt denominator);

// Fixed-point rendering with `places` digits, rounding halves away from
// zero: 3+56/138 -> "3.41", 14/5 -> "2.80", -1/5 -> "-0.20".
std::string decimal_string(const Rational& value, int places = 2);

// "num/den" in lowest terms; whole numbers render without a slash.
std::string fraction_string(const Rational& value);

}  // namespace bellgram
