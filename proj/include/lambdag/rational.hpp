#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lambdag {

using Rational = mpq_class;

/// p/q in canonical form; q must be nonzero.
inline Rational frac(long p, long q) {
  Rational r(p);
  r /= q;
  return r;
}

/// Canonical "p/q" text (q printed even when it is 1).
inline std::string to_fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Shortest text: "p" for integers, "p/q" otherwise.
inline std::string to_short(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

/// Exact determinant by fraction Gaussian elimination (matrix is consumed).
Rational determinant(std::vector<std::vector<Rational>> m);

} // namespace lambdag
