#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bicoarse {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q". Throws Error(InvalidInput) otherwise or on q = 0.
Rational parse_rational(std::string_view text);
// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& r);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace bicoarse
