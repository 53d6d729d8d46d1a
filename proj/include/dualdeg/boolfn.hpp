#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dualdeg/rational.hpp"

namespace dualdeg {

using Point = uint32_t;
using json = nlohmann::ordered_json;

constexpr int kDefaultArityCap = 24;

enum class Convention { ZeroOne, PlusMinus };
enum class Val : uint8_t { Zero = 0, One = 1, Undef = 2 };

// A partial Boolean function materialized as a full table on the m-bit cube.
//
// Point bit i holds variable i+1; in PlusMinus convention a set bit encodes
// the coordinate -1 and Val::One encodes the output -1 (logical TRUE). Under
// that encoding the 0/1 and +-1 views of a function share one table, so
// switching convention is a tag flip.
struct PartialBoolFn {
  int arity = 0;
  Convention conv = Convention::ZeroOne;
  std::vector<uint8_t> table;  // Val per point, size 2^arity
  json generator;              // descriptor, or null for "explicit"

  Val at(Point x) const { return static_cast<Val>(table[x]); }
  bool in_domain(Point x) const { return at(x) != Val::Undef; }
  size_t cube_size() const { return size_t(1) << arity; }
  size_t domain_size() const;
  bool is_total() const { return domain_size() == cube_size(); }

  // Output as an exact rational in this convention: One -> 1 or -1, Zero -> 0 or +1.
  Rational value_of(Point x) const;

  static PartialBoolFn explicit_fn(int arity, std::vector<uint8_t> table,
                                   Convention conv = Convention::ZeroOne);
  static PartialBoolFn empty_fn(int arity);
};

struct GapParams {
  long n = 1;
  Rational eps;
};

PartialBoolFn make_and(int m);
PartialBoolFn make_or(int m);
PartialBoolFn make_xor(int m);
PartialBoolFn make_maj(int m);
PartialBoolFn make_const(int m, int bit);
// Col_n^k: inputs encode f:[n]->[n], n a power of two, k | n.
PartialBoolFn make_col(long n, long k, int cap = kDefaultArityCap);
// PTP_n: permutation vs far-from-permutation promise.
PartialBoolFn make_ptp(long n, int cap = kDefaultArityCap);

// Name-driven generator used by the CLI; params like {"m":3} or {"n":4,"k":2}.
PartialBoolFn gen_named(const std::string& name, const json& params,
                        int cap = kDefaultArityCap);

PartialBoolFn gap_maj(const PartialBoolFn& f, const GapParams& g,
                      int cap = kDefaultArityCap);
PartialBoolFn gap_and(const PartialBoolFn& f, const GapParams& g,
                      int cap = kDefaultArityCap);

PartialBoolFn convert_convention(const PartialBoolFn& f);
PartialBoolFn complement(const PartialBoolFn& f);

// Encode f:[n]->[n] (1-based values) as a cube point, field i at bits [i*w,(i+1)*w).
Point encode_map(const std::vector<long>& values, long n);

inline int block_count(const PartialBoolFn& inner, const PartialBoolFn& composed) {
  return composed.arity / inner.arity;
}

}  // namespace dualdeg
