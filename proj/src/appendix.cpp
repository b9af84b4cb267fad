#include "lambdag/parabolic.hpp"

#include <stdexcept>
#include <string>

namespace lambdag {

bool satisfies_sqrt_bound(long s, long a, long disc, long den) {
  // s <= (a - sqrt(disc)) / den  <=>  a - den*s >= sqrt(disc)
  const long lhs = a - den * s;
  if (lhs < 0) return false;
  return lhs * lhs >= disc;
}

AppendixRecord appendix_formulas(char type_label, int rank, int s) {
  validate_type(type_label, rank);
  const long l = rank;
  AppendixRecord r;
  r.type = type_label;
  r.rank = rank;
  r.s = s;
  const long smax = (type_label == 'D') ? l - 4 : l - 2;
  if (type_label != 'A' && type_label != 'B' && type_label != 'C' && type_label != 'D')
    throw std::invalid_argument("closed forms exist only for the classical types A, B, C, D");
  if (s < 1 || s > smax)
    throw std::invalid_argument("s must lie in 1.." + std::to_string(smax) + " for " + std::string(1, type_label) +
                                std::to_string(rank));
  r.n1 = long(s) * (s + 1) / 2;
  switch (type_label) {
  case 'A':
    r.n = l * (l + 1) / 2;
    r.n2 = r.n2_derivation = (l - s - 1) * (l - s) / 2;
    r.gap1_printed = frac(3 * s * s + (-4 * l + 3) * s + l * l - 3 * l, 2);
    r.gap2_printed = Rational(3 * s * s + (-2 * l + 3) * s - 2 * l);
    r.bound_a = 4 * l - 3;
    r.printed_a = 2 * l - 3;
    r.bound_disc = r.printed_disc = 4 * l * l + 12 * l + 9;
    r.bound_den = r.printed_den = 6;
    r.threshold = 6;
    break;
  case 'B':
  case 'C':
    r.n = l * l;
    r.n2 = r.n2_derivation = (l - s - 1) * (l - s - 1);
    r.gap1_printed = frac(5 * s * s + (-8 * l + 9) * s + 2 * l * l - 8 * l + 4, 2);
    r.gap2_printed = Rational(2 * s * s + (-2 * l + 5) * s - 4 * l + 4);
    r.bound_a = r.printed_a = 8 * l - 9;
    r.bound_disc = r.printed_disc = 24 * l * l + 16 * l + 1;
    r.bound_den = r.printed_den = 10;
    r.threshold = 7;
    break;
  default: // D
    r.n = l * (l - 1);
    r.n2 = (l - s - 1) * (l - s - 1);
    r.n2_derivation = (l - s - 1) * (l - s - 2);
    r.gap1_printed = Rational(5 * s * s - s * (4 * l - 7) + l * l - 5 * l + 4);
    r.gap2_printed = Rational(2 * s * s + (-2 * l + 4) * s - 2 * l + 2);
    r.bound_a = r.printed_a = 8 * l - 13;
    r.bound_disc = r.printed_disc = 24 * l * l - 8 * l + 9;
    r.bound_den = r.printed_den = 10;
    r.threshold = 8;
    break;
  }
  r.d = r.n - r.n1 - r.n2_derivation;
  r.gap1 = Rational(r.n - 2 * r.d - r.n1);
  r.gap2 = Rational(r.n - 2 * r.d - r.n2_derivation);
  return r;
}

} // namespace lambdag
