#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "ce/error.hpp"

namespace ce {

// Exact ground arithmetic. cpp_rational keeps gcd(num, den) = 1 and den >= 1
// as class invariants, which is exactly the canonical form we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Accepts "p" or "p/q" with optional sign. q = 0 is a domain error.
Rational parse_rational(const std::string& s);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& r);

double to_double(const Rational& r);

Int int_pow(Int base, unsigned e);

} // namespace ce
