#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ocb {

// All arithmetic in this library is exact. Int is arbitrary precision so
// factorial-scale combinatorics and determinants never overflow.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// Smallest non-negative representative of a mod m (m > 0).
inline Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of a modulo m, for gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
  Int t = 0, new_t = 1;
  Int r = m, new_r = mod_pos(a, m);
  while (new_r != 0) {
    Int q = r / new_r;
    Int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return mod_pos(t, m);
}

inline int64_t padic_valuation(int64_t p, int64_t k) {
  if (k == 0) throw std::invalid_argument("padic_valuation: k must be nonzero");
  int64_t v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

inline int64_t ipow(int64_t b, int64_t e) {
  int64_t r = 1;
  for (int64_t i = 0; i < e; ++i) r *= b;
  return r;
}

inline int64_t to_i64(const Int& a) {
  if (a > Int(INT64_MAX) || a < Int(INT64_MIN))
    throw std::overflow_error("to_i64: value out of range");
  return static_cast<int64_t>(a);
}

}  // namespace ocb
