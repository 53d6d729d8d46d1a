#pragma once

#include <random>

#include "dualdeg/boolfn.hpp"
#include "dualdeg/polylib.hpp"

namespace dualdeg::testutil {

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline Rational rand_rational(std::mt19937_64& g, long lo = -3, long hi = 3,
                              long max_den = 4) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, max_den);
  return rat(num(g), den(g));
}

inline Rational rand_nonneg_rational(std::mt19937_64& g, long hi = 3,
                                     long max_den = 4) {
  std::uniform_int_distribution<long> num(0, hi), den(1, max_den);
  return rat(num(g), den(g));
}

inline PartialBoolFn rand_partial_fn(std::mt19937_64& g, int arity,
                                     bool allow_undef = true) {
  std::uniform_int_distribution<int> pick(0, allow_undef ? 4 : 1);
  std::vector<uint8_t> table(size_t(1) << arity);
  for (auto& v : table) {
    int r = pick(g);
    v = uint8_t(r == 4 ? Val::Undef : (r % 2 ? Val::One : Val::Zero));
  }
  return PartialBoolFn::explicit_fn(arity, std::move(table));
}

inline CubeFn rand_cubefn(std::mt19937_64& g, int arity, int zero_weight = 1) {
  CubeFn c(arity);
  std::uniform_int_distribution<int> z(0, zero_weight);
  for (auto& v : c.values)
    if (z(g) == 0) v = rand_rational(g);
  return c;
}

// Direct monomial enumeration; the independent oracle for the transform.
inline int phd_naive(const CubeFn& psi) {
  int best = psi.arity;
  for (uint32_t s = 0; s < psi.cube_size(); s++) {
    Rational sum(0);
    for (Point x = 0; x < psi.cube_size(); x++)
      if ((x & s) == s) sum += psi.at(x);
    if (sgn(sum) != 0) best = std::min(best, std::popcount(s) - 1);
  }
  return best;
}

}  // namespace dualdeg::testutil
