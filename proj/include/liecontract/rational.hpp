#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <vector>

#include "liecontract/errors.hpp"

namespace liecontract {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always normalized: positive denominator,
/// gcd(|num|, den) = 1. No floating point appears anywhere in the library.
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

namespace detail {
inline bool decimal_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline bool integer_literal(const std::string& s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+'))
    return decimal_digits(s.substr(1));
  return decimal_digits(s);
}
}  // namespace detail

/// Parses "p" or "p/q" with decimal integers p, q. Anything else (including
/// floating-point notation) is rejected.
inline Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!detail::integer_literal(text))
      throw ParseError("bad rational literal: \"" + text + "\"");
    return Rat(Int(text));
  }
  std::string p = text.substr(0, slash);
  std::string q = text.substr(slash + 1);
  if (!detail::integer_literal(p) || !detail::integer_literal(q))
    throw ParseError("bad rational literal: \"" + text + "\"");
  Int nu(p), de(q);
  if (de == 0) throw ParseError("zero denominator in \"" + text + "\"");
  if (de < 0) {
    nu = -nu;
    de = -de;
  }
  return Rat(nu, de);
}

/// Renders as "p" or "p/q", the inverse of parse_rational on normalized values.
inline std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int int_lcm(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

/// gcd of |entries|; 0 for the zero vector.
inline Int vector_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = int_gcd(g, x);
  return g;
}

/// Smallest positive integer clearing every denominator.
inline Int common_denominator(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) l = int_lcm(l, denominator(x));
  return l;
}

/// Numerator of x * l; exact integer when l clears x's denominator.
inline Int scale_to_int(const Rat& x, const Int& l) {
  Rat t = x * Rat(l);
  return numerator(t);
}

/// q^e for integer e (negative allowed when q != 0).
inline Rat rat_pow(const Rat& q, const Int& e) {
  if (e == 0) return Rat(1);
  bool invert = e < 0;
  if (invert && q == 0) throw Error("zero base with negative exponent");
  Int n = abs(e);
  Rat base = q, acc(1);
  while (n > 0) {
    if ((n & 1) != 0) acc *= base;
    base *= base;
    n >>= 1;
  }
  if (invert) acc = Rat(1) / acc;
  return acc;
}

}  // namespace liecontract
