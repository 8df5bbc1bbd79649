#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace feynkit {

/// Exact rational scalar used throughout the symbolic layer.
/// Floating point appears only inside transcendental evaluations
/// (sqrt, exp) and in the numerical oracles.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline std::string to_string(const Rat& r) {
  return r.str();
}

/// Parses "p/q", "p", or "-p/q". Throws std::invalid_argument on junk.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

inline Rat rat_pow(Rat base, unsigned exp) {
  Rat out(1);
  while (exp) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1u;
  }
  return out;
}

inline Rat factorial(unsigned n) {
  BigInt f(1);
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rat(f);
}

/// (2n-1)!! — the number of perfect pairings of 2n points.
inline BigInt double_factorial_odd(unsigned n) {
  BigInt f(1);
  for (unsigned k = 1; k <= n; ++k) f *= (2 * k - 1);
  return f;
}

}  // namespace feynkit
