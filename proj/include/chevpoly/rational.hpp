#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevpoly {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw std::domain_error("expected an integer, got " + q.str());
  return num(q);
}

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

// Floor/ceil of a rational, as integers.
inline Int rat_floor(const Rat& q) {
  Int n = num(q), d = den(q);
  Int t = n / d;
  if (n % d != 0 && n < 0) t -= 1;
  return t;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

// Divides a vector by the gcd of its entries; the zero vector is unchanged.
inline void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = int_gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

inline Int lcm_of_denominators(const std::vector<Rat>& v) {
  Int l = 1;
  for (const Rat& q : v) {
    Int d = den(q);
    l = l / int_gcd(l, d) * d;
  }
  return l;
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

// FNV-1a over a byte string; stable across runs and platforms.
inline std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace chevpoly
