#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "cstkit/error.hpp"

namespace cstkit {

// GMP keeps mpq_class canonical after arithmetic, but not after the two-argument constructor.
using Integer = mpz_class;
using Rational = mpq_class;

/// p/q in lowest terms.
inline Rational ratio(long p, long q) {
  if (q == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses `p` or `p/q` with optional leading sign.
inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  if (q.get_den() == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline Rational rising_factorial(const Rational& x, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x + i;
  return r;
}

inline Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

}  // namespace cstkit
