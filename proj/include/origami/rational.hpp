#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace origami::alg {

using Int = boost::multiprecision::cpp_int;

// Always reduced, denominator > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

// "p" or "p/q", optional sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& r);

} // namespace origami::alg
