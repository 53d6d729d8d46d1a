#include "dualdeg/rational.hpp"

namespace dualdeg {

Rational rat_parse(const std::string& s) {
  if (s.empty()) throw InvalidParams("empty rational literal");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw InvalidParams("bad rational literal: " + s);
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw InvalidParams("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rat_pow(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  // base canonical => powers canonical
  return out;
}

Integer floor_rat(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil_rat(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

namespace {

// Dyadic value n / 2^frac_bits with outward rounding helpers.
struct Dyadic {
  Integer n;
  unsigned frac;
};

Dyadic round_down(const Rational& r, unsigned frac) {
  Rational s = r;
  mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), frac);
  return {floor_rat(s), frac};
}

Dyadic round_up(const Rational& r, unsigned frac) {
  Rational s = r;
  mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), frac);
  return {ceil_rat(s), frac};
}

Rational to_rat(const Dyadic& d) {
  Rational r(d.n);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), d.frac);
  return r;
}

// Is r == 2^(p/2^j) for the given p, j? Equivalent to r^(2^j) == 2^p.
bool log_is_dyadic(const Rational& r, const Integer& p, unsigned j) {
  Rational lhs = r;
  for (unsigned i = 0; i < j; i++) lhs = lhs * lhs;
  Rational rhs(1);
  if (p >= 0)
    mpq_mul_2exp(rhs.get_mpq_t(), rhs.get_mpq_t(), p.get_ui());
  else
    mpq_div_2exp(rhs.get_mpq_t(), rhs.get_mpq_t(), Integer(-p).get_ui());
  return lhs == rhs;
}

}  // namespace

Bracket log2_bracket(const Rational& r, unsigned prec_bits) {
  if (sgn(r) <= 0) throw InvalidParams("log2 of nonpositive value");

  // Integer part: largest k with 2^k <= r.
  long k = 0;
  {
    Rational t = r;
    while (t >= 2) {
      mpq_div_2exp(t.get_mpq_t(), t.get_mpq_t(), 1);
      k++;
    }
    while (t < 1) {
      mpq_mul_2exp(t.get_mpq_t(), t.get_mpq_t(), 1);
      k--;
    }
    if (t == 1) return {Rational(k), Rational(k), true};
  }

  for (unsigned guard = prec_bits + 16;; guard *= 2) {
    // x in [1,2), tracked as an outward-rounded dyadic interval.
    Rational x0 = r;
    if (k >= 0)
      mpq_div_2exp(x0.get_mpq_t(), x0.get_mpq_t(), (unsigned long)k);
    else
      mpq_mul_2exp(x0.get_mpq_t(), x0.get_mpq_t(), (unsigned long)(-k));
    Rational lo = x0, hi = x0;
    Integer frac_num = 0;  // accumulated fraction bits, value frac_num / 2^bits
    unsigned bits = 0;
    bool stuck = false;
    while (bits < prec_bits + 2) {
      lo = lo * lo;
      hi = hi * hi;
      lo = to_rat(round_down(lo, guard));
      hi = to_rat(round_up(hi, guard));
      bits++;
      frac_num <<= 1;
      if (lo >= 2) {
        frac_num += 1;
        mpq_div_2exp(lo.get_mpq_t(), lo.get_mpq_t(), 1);
        mpq_div_2exp(hi.get_mpq_t(), hi.get_mpq_t(), 1);
      } else if (hi < 2) {
        // bit 0, nothing to do
      } else {
        // Interval straddles 2: either log2 is exactly dyadic here or we
        // need more working precision.
        Integer p = (Integer(k) << bits) + frac_num + 1;
        if (log_is_dyadic(r, p, bits)) {
          Rational v(p);
          mpq_div_2exp(v.get_mpq_t(), v.get_mpq_t(), bits);
          return {v, v, true};
        }
        stuck = true;
        break;
      }
    }
    if (stuck) continue;
    Rational base(Integer((Integer(k) << bits) + frac_num));
    mpq_div_2exp(base.get_mpq_t(), base.get_mpq_t(), bits);
    Rational step = pow2_neg(bits);
    // True value lies in [base, base + 2^-bits); widen by one step for the
    // outward rounding performed along the way.
    Bracket b{base - step, base + step + step, false};
    if (b.width() <= pow2_neg(prec_bits)) return b;
  }
}

Bracket entropy_bracket(const std::vector<Rational>& masses, unsigned prec_bits) {
  Rational total(0);
  for (const auto& m : masses) {
    if (sgn(m) < 0) throw InvalidParams("negative mass");
    total += m;
  }
  if (total != 1) throw InvalidParams("masses must sum to 1");

  unsigned per_term = prec_bits + 8;
  Bracket acc{Rational(0), Rational(0), true};
  for (const auto& m : masses) {
    if (sgn(m) == 0) continue;  // 0 log 0 = 0
    Bracket l = log2_bracket(Rational(1) / m, per_term);
    acc.lo += m * l.lo;
    acc.hi += m * l.hi;
    acc.exact = acc.exact && l.exact;
  }
  return acc;
}

}  // namespace dualdeg
