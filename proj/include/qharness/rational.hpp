#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace qh {

/// Arbitrary-precision rational scalar used by the exact verification paths.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// x^e with the convention 0^0 = 1. Negative exponents invert; x must be
/// nonzero in that case.
inline Rational pow_int(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  Rational base = x;
  unsigned long m;
  if (e < 0) {
    if (sgn(base) == 0) throw std::domain_error("pow_int: negative power of zero");
    base = Rational(1) / base;
    m = static_cast<unsigned long>(-(e + 1)) + 1;
  } else {
    m = static_cast<unsigned long>(e);
  }
  Rational acc(1);
  while (m != 0) {
    if (m & 1u) acc *= base;
    base *= base;
    m >>= 1;
  }
  return acc;
}

inline double pow_int(double x, long e) {
  if (e == 0) return 1.0;  // covers 0^0
  return std::pow(x, static_cast<double>(e));
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline double to_double(const Rational& x) { return x.get_d(); }

}  // namespace qh
