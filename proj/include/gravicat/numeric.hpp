#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gravicat {

// Exact arithmetic everywhere: arbitrary-precision integers, and rationals
// wherever elimination or completion-of-squares needs division.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// floor/ceil of a rational as integers (denominator is canonically positive).
inline Int rat_floor(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int quo = n / d;
  if (n % d != 0 && n < 0) --quo;
  return quo;
}

inline Int rat_ceil(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int quo = n / d;
  if (n % d != 0 && n > 0) ++quo;
  return quo;
}

// nearest integer; ties go up, any tie-break works for interval walks
inline Int rat_round(const Rat& q) { return rat_floor(q + Rat(1, 2)); }

std::string rat_to_string(const Rat& q);   // canonical "p/q" form, q >= 1
Rat rat_from_string(const std::string& s); // accepts "p" or "p/q"

struct Xgcd {
  Int g, s, t; // s*a + t*b = g, g >= 0
};
Xgcd xgcd(const Int& a, const Int& b);

} // namespace gravicat
