#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "dualdeg/errors.hpp"

namespace dualdeg {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw InvalidParams("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q" or plain "p".
Rational rat_parse(const std::string& s);
std::string rat_str(const Rational& r);

inline int sgn(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }
inline Rational rabs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational rat_pow(const Rational& base, unsigned long e);
Integer floor_rat(const Rational& r);
Integer ceil_rat(const Rational& r);

// 2^-e as an exact rational, e >= 0.
inline Rational pow2_neg(unsigned long e) {
  Rational r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), e);
  return r;
}

// Certified enclosure of an irrational quantity.
struct Bracket {
  Rational lo, hi;
  bool exact = false;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool overlaps(const Bracket& o) const { return lo <= o.hi && o.lo <= hi; }
};

// log2 of a positive rational, enclosure of width <= 2^-prec_bits.
// Detects exactly-dyadic logarithms and returns a point bracket for them.
Bracket log2_bracket(const Rational& r, unsigned prec_bits);

// Shannon entropy (bits) of nonnegative masses summing to 1.
Bracket entropy_bracket(const std::vector<Rational>& masses, unsigned prec_bits);

}  // namespace dualdeg
