#pragma once

#include <gmpxx.h>
#include <string>

namespace ccdeg {

// Exact rational coefficients. GMP keeps values reduced with a positive
// denominator, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace ccdeg
