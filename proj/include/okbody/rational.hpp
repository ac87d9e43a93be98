#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace okb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

// floor(p/q) for exact rationals
inline Int rat_floor(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int r = n / d;
  if (r * d > n) --r;
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int r = n / d;
  if (r * d < n) ++r;
  return r;
}

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = int_gcd(a, b);
  Int r = (a / g) * b;
  return r < 0 ? Int(-r) : r;
}

// "p/q" or plain integer string
inline std::string rat_to_string(const Rat& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int p(s.substr(0, slash)), q(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator in rational: " + s);
  return Rat(p, q);
}

}  // namespace okb
