#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace singwf {

// Arbitrary-precision rational; always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "num/den" in lowest terms, including integers ("2/1", "0/1").
std::string to_fraction_string(const Rational& r);

// Human form: integers print without a denominator ("2", "-1/3").
std::string to_display_string(const Rational& r);

// Accepts "n", "-n", "n/d"; throws Error(FormatError) on anything else or d == 0.
Rational parse_rational(std::string_view text);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

}  // namespace singwf
