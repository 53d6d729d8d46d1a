#include "dualdeg/boolfn.hpp"

#include <bit>
#include <numeric>

#include <omp.h>

namespace dualdeg {

size_t PartialBoolFn::domain_size() const {
  size_t c = 0;
  for (uint8_t v : table)
    if (v != uint8_t(Val::Undef)) c++;
  return c;
}

Rational PartialBoolFn::value_of(Point x) const {
  Val v = at(x);
  if (v == Val::Undef) throw InvalidParams("value_of on undefined point");
  if (conv == Convention::ZeroOne) return Rational(v == Val::One ? 1 : 0);
  return Rational(v == Val::One ? -1 : 1);
}

PartialBoolFn PartialBoolFn::explicit_fn(int arity, std::vector<uint8_t> table,
                                         Convention conv) {
  if (arity < 0 || arity > kDefaultArityCap) throw TooLarge("arity out of range");
  if (table.size() != (size_t(1) << arity)) throw InvalidParams("table size mismatch");
  PartialBoolFn f;
  f.arity = arity;
  f.conv = conv;
  f.table = std::move(table);
  f.generator = nullptr;
  return f;
}

PartialBoolFn PartialBoolFn::empty_fn(int arity) {
  auto f = explicit_fn(arity, std::vector<uint8_t>(size_t(1) << arity,
                                                   uint8_t(Val::Undef)));
  f.generator = json{{"name", "EMPTY"}, {"m", arity}};
  return f;
}

namespace {

PartialBoolFn from_rule(int m, const char* name, Val (*rule)(Point, int)) {
  if (m < 1 || m > kDefaultArityCap) throw InvalidParams("bad arity");
  PartialBoolFn f;
  f.arity = m;
  f.conv = Convention::ZeroOne;
  f.table.resize(size_t(1) << m);
  for (Point x = 0; x < f.table.size(); x++) f.table[x] = uint8_t(rule(x, m));
  f.generator = json{{"name", name}, {"m", m}};
  return f;
}

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(long n) { return std::countr_zero(static_cast<unsigned long>(n)); }

}  // namespace

PartialBoolFn make_and(int m) {
  return from_rule(m, "AND", [](Point x, int m) {
    return std::popcount(x) == m ? Val::One : Val::Zero;
  });
}

PartialBoolFn make_or(int m) {
  return from_rule(m, "OR",
                   [](Point x, int) { return x != 0 ? Val::One : Val::Zero; });
}

PartialBoolFn make_xor(int m) {
  return from_rule(m, "XOR", [](Point x, int) {
    return (std::popcount(x) & 1) ? Val::One : Val::Zero;
  });
}

PartialBoolFn make_maj(int m) {
  if (m % 2 == 0) throw InvalidParams("MAJ needs odd arity");
  return from_rule(m, "MAJ", [](Point x, int m) {
    return 2 * std::popcount(x) > m ? Val::One : Val::Zero;
  });
}

PartialBoolFn make_const(int m, int bit) {
  auto f = from_rule(m, bit ? "CONST1" : "CONST0", [](Point, int) { return Val::Zero; });
  if (bit) std::fill(f.table.begin(), f.table.end(), uint8_t(Val::One));
  f.generator = json{{"name", bit ? "CONST1" : "CONST0"}, {"m", m}};
  return f;
}

namespace {

// Decode the i-th field (1-based output value) of a packed map point.
inline long field(Point x, int i, int w) { return ((x >> (i * w)) & ((1u << w) - 1)) + 1; }

struct MapShape {
  long n;
  int w;
  int arity;
};

MapShape map_shape(long n, int cap) {
  if (!is_power_of_two(n)) throw InvalidParams("n must be a power of two");
  int w = log2_exact(n);
  long arity = n * w;
  if (arity > cap) throw TooLarge("n*log2(n) exceeds arity cap");
  if (arity < 1) throw InvalidParams("degenerate parameters");
  return {n, w, int(arity)};
}

}  // namespace

PartialBoolFn make_col(long n, long k, int cap) {
  MapShape s = map_shape(n, cap);
  if (k < 2 || n % k != 0) throw InvalidParams("COL requires k >= 2 and k | n");
  PartialBoolFn f;
  f.arity = s.arity;
  f.conv = Convention::ZeroOne;
  f.table.resize(size_t(1) << s.arity);
#pragma omp parallel for schedule(static)
  for (long long x = 0; x < (long long)f.table.size(); x++) {
    std::vector<int> fiber(n + 1, 0);
    for (int i = 0; i < s.n; i++) fiber[field(Point(x), i, s.w)]++;
    bool perm = true, kto1 = true;
    for (long v = 1; v <= n; v++) {
      if (fiber[v] != 1) perm = false;
      if (fiber[v] != 0 && fiber[v] != k) kto1 = false;
    }
    f.table[x] = uint8_t(perm ? Val::One : (kto1 ? Val::Zero : Val::Undef));
  }
  f.generator = json{{"name", "COL"}, {"n", n}, {"k", k}};
  return f;
}

PartialBoolFn make_ptp(long n, int cap) {
  MapShape s = map_shape(n, cap);
  PartialBoolFn f;
  f.arity = s.arity;
  f.conv = Convention::ZeroOne;
  f.table.resize(size_t(1) << s.arity);
#pragma omp parallel for schedule(static)
  for (long long x = 0; x < (long long)f.table.size(); x++) {
    uint64_t image = 0;
    for (int i = 0; i < s.n; i++) image |= uint64_t(1) << field(Point(x), i, s.w);
    long img = std::popcount(image);
    // A map agrees with some permutation on at most |image| coordinates, so
    // distance-from-every-permutation >= n/8 is exactly 8*(n-|image|) >= n.
    Val v;
    if (img == n)
      v = Val::One;
    else if (8 * (n - img) >= n)
      v = Val::Zero;
    else
      v = Val::Undef;
    f.table[x] = uint8_t(v);
  }
  f.generator = json{{"name", "PTP"}, {"n", n}};
  return f;
}

PartialBoolFn gen_named(const std::string& name, const json& params, int cap) {
  auto m = [&]() { return params.at("m").get<int>(); };
  if (name == "AND") return make_and(m());
  if (name == "OR") return make_or(m());
  if (name == "XOR") return make_xor(m());
  if (name == "MAJ") return make_maj(m());
  if (name == "CONST0") return make_const(m(), 0);
  if (name == "CONST1") return make_const(m(), 1);
  if (name == "COL")
    return make_col(params.at("n").get<long>(), params.at("k").get<long>(), cap);
  if (name == "PTP") return make_ptp(params.at("n").get<long>(), cap);
  if (name == "EMPTY") return PartialBoolFn::empty_fn(m());
  throw InvalidParams("unknown generator: " + name);
}

namespace {

enum class GapKind { Maj, And };

PartialBoolFn gap_compose(const PartialBoolFn& f, const GapParams& g, GapKind kind,
                          int cap) {
  if (g.n < 1) throw InvalidParams("need n >= 1");
  if (kind == GapKind::Maj) {
    if (!(g.eps > rat(1, 2) && g.eps <= 1)) throw InvalidParams("GapMaj needs 1/2 < eps <= 1");
  } else {
    if (!(g.eps > 0 && g.eps < 1)) throw InvalidParams("GapAND needs 0 < eps < 1");
  }
  long arity = (long)f.arity * g.n;
  if (arity > cap) throw TooLarge("composed arity exceeds cap");

  PartialBoolFn F;
  F.arity = int(arity);
  F.conv = f.conv;
  F.table.resize(size_t(1) << arity);

  // count >= eps*n for an integer count is count >= ceil(eps*n), exactly.
  const long need = ceil_rat(g.eps * g.n).get_si();
  const Point mask = (Point(1) << f.arity) - 1;

#pragma omp parallel for schedule(static)
  for (long long x = 0; x < (long long)F.table.size(); x++) {
    long yes = 0, no = 0, undef = 0;
    for (long i = 0; i < g.n; i++) {
      Val v = f.at((Point(x) >> (i * f.arity)) & mask);
      if (v == Val::One)
        yes++;
      else if (v == Val::Zero)
        no++;
      else
        undef++;
    }
    Val out = Val::Undef;
    if (kind == GapKind::Maj) {
      if (yes >= need)
        out = Val::One;
      else if (no >= need)
        out = Val::Zero;
    } else {
      // True block composition: every block must be defined.
      if (undef == 0) {
        if (yes == g.n)
          out = Val::One;
        else if (no >= need)
          out = Val::Zero;
      }
    }
    F.table[x] = uint8_t(out);
  }
  F.generator = json{{"name", kind == GapKind::Maj ? "GAPMAJ" : "GAPAND"},
                     {"n", g.n},
                     {"eps", rat_str(g.eps)},
                     {"inner", f.generator}};
  return F;
}

}  // namespace

PartialBoolFn gap_maj(const PartialBoolFn& f, const GapParams& g, int cap) {
  return gap_compose(f, g, GapKind::Maj, cap);
}

PartialBoolFn gap_and(const PartialBoolFn& f, const GapParams& g, int cap) {
  return gap_compose(f, g, GapKind::And, cap);
}

PartialBoolFn convert_convention(const PartialBoolFn& f) {
  // The shared table encoding makes x -> (1-x)/2, f -> (1-f)/2 a tag flip.
  PartialBoolFn g = f;
  g.conv = (f.conv == Convention::ZeroOne) ? Convention::PlusMinus : Convention::ZeroOne;
  return g;
}

PartialBoolFn complement(const PartialBoolFn& f) {
  PartialBoolFn g = f;
  for (auto& v : g.table) {
    if (v == uint8_t(Val::Zero))
      v = uint8_t(Val::One);
    else if (v == uint8_t(Val::One))
      v = uint8_t(Val::Zero);
  }
  if (!f.generator.is_null()) g.generator = json{{"name", "NOT"}, {"inner", f.generator}};
  return g;
}

Point encode_map(const std::vector<long>& values, long n) {
  if (!is_power_of_two(n)) throw InvalidParams("n must be a power of two");
  if ((long)values.size() != n) throw InvalidParams("need n values");
  int w = log2_exact(n);
  Point x = 0;
  for (long i = 0; i < n; i++) {
    if (values[i] < 1 || values[i] > n) throw InvalidInput("map value out of range");
    x |= Point(values[i] - 1) << (i * w);
  }
  return x;
}

}  // namespace dualdeg
