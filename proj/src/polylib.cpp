#include "dualdeg/polylib.hpp"

#include <bit>
#include <set>

#include "dualdeg/kernels.hpp"

namespace dualdeg {

Rational CubeFn::l1_norm() const {
  Rational s(0);
  for (const auto& v : values) s += rabs(v);
  return s;
}

size_t CubeFn::support_size() const {
  size_t c = 0;
  for (const auto& v : values)
    if (sgn(v) != 0) c++;
  return c;
}

int MultilinearPoly::degree() const {
  int d = 0;
  for (const auto& [mono, c] : coeffs)
    if (sgn(c) != 0) d = std::max(d, std::popcount(mono));
  return d;
}

Rational MultilinearPoly::monomial_at(uint32_t mono, Point x, Convention conv) {
  if (conv == Convention::ZeroOne) return Rational((x & mono) == mono ? 1 : 0);
  return Rational((std::popcount(x & mono) & 1) ? -1 : 1);
}

Rational MultilinearPoly::eval(Point x) const {
  Rational s(0);
  for (const auto& [mono, c] : coeffs) {
    if (conv == Convention::ZeroOne) {
      if ((x & mono) == mono) s += c;
    } else {
      if (std::popcount(x & mono) & 1)
        s -= c;
      else
        s += c;
    }
  }
  return s;
}

void MultilinearPoly::set(uint32_t mono, const Rational& c) {
  if (sgn(c) == 0)
    coeffs.erase(mono);
  else
    coeffs[mono] = c;
}

Rational UnivariatePoly::eval(const Rational& x) const {
  Rational s(0);
  for (size_t i = c.size(); i-- > 0;) s = s * x + c[i];
  return s;
}

void UnivariatePoly::trim() {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), Rational(0));
  for (size_t i = 0; i < o.c.size(); i++) c[i] += o.c[i];
  trim();
  return *this;
}

UnivariatePoly UnivariatePoly::scaled(const Rational& s) const {
  UnivariatePoly r;
  if (sgn(s) == 0) return r;
  r.c.reserve(c.size());
  for (const auto& v : c) r.c.push_back(v * s);
  return r;
}

UnivariatePoly UnivariatePoly::constant(const Rational& v) {
  UnivariatePoly r;
  if (sgn(v) != 0) r.c.push_back(v);
  return r;
}

Rational inner_product(const CubeFn& psi, const MultilinearPoly& p) {
  if (psi.arity != p.arity) throw ArityError("inner_product arity mismatch");
  Rational s(0);
  for (Point x = 0; x < psi.cube_size(); x++) {
    if (sgn(psi.values[x]) == 0) continue;
    s += psi.values[x] * p.eval(x);
  }
  return s;
}

int pure_high_degree(const CubeFn& psi) {
  std::vector<Rational> g = psi.values;
  superset_sum(g, psi.arity);
  int best = psi.arity;  // zero function convention
  // <psi, chi_S> = sum over supersets of S; the smallest |S| with a nonzero
  // sum bounds the answer.
  for (size_t s = 0; s < g.size(); s++) {
    if (sgn(g[s]) != 0) best = std::min(best, std::popcount(uint32_t(s)) - 1);
  }
  return best;
}

std::vector<std::pair<uint32_t, Rational>> low_monomial_sums(const CubeFn& psi,
                                                             int dmax) {
  std::vector<uint32_t> monos;
  for (uint32_t s = 0; s < psi.cube_size(); s++)
    if (std::popcount(s) <= dmax) monos.push_back(s);
  std::vector<Rational> acc(monos.size(), Rational(0));
  // One pass over the support, crediting every sub-monomial.
  for (Point x = 0; x < psi.cube_size(); x++) {
    if (sgn(psi.values[x]) == 0) continue;
    for (size_t j = 0; j < monos.size(); j++)
      if ((x & monos[j]) == monos[j]) acc[j] += psi.values[x];
  }
  std::vector<std::pair<uint32_t, Rational>> out;
  out.reserve(monos.size());
  for (size_t j = 0; j < monos.size(); j++) out.emplace_back(monos[j], acc[j]);
  return out;
}

UnivariatePoly lagrange_interpolate(
    const std::vector<std::pair<Rational, Rational>>& nodes) {
  std::set<Rational> seen;
  for (const auto& [x, y] : nodes)
    if (!seen.insert(x).second) throw DegenerateNodes("duplicate abscissa");
  const size_t k = nodes.size();
  if (k == 0) return {};

  // Newton form: divided differences, then expand over the node basis.
  std::vector<Rational> dd(k);
  for (size_t i = 0; i < k; i++) dd[i] = nodes[i].second;
  for (size_t level = 1; level < k; level++)
    for (size_t i = k - 1; i >= level; i--)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i].first - nodes[i - level].first);

  UnivariatePoly p;                       // accumulated polynomial
  UnivariatePoly basis = UnivariatePoly::constant(Rational(1));
  for (size_t i = 0; i < k; i++) {
    p += basis.scaled(dd[i]);
    // basis *= (x - x_i)
    UnivariatePoly next;
    next.c.assign(basis.c.size() + 1, Rational(0));
    for (size_t j = 0; j < basis.c.size(); j++) {
      next.c[j + 1] += basis.c[j];
      next.c[j] -= basis.c[j] * nodes[i].first;
    }
    next.trim();
    basis = std::move(next);
  }
  p.trim();
  return p;
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return Rational(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return Rational(b);
}

std::pair<UnivariatePoly, HelperReport> helper_p(const Rational& a, long n,
                                                 const Rational& eps) {
  if (n < 1) throw InvalidParams("helper_p needs n >= 1");
  if (!(eps > rat(1, 2) && eps < 1)) throw InvalidParams("helper_p needs eps in (1/2,1)");
  if (a < 1) throw InvalidParams("helper_p needs a >= 1");

  const Rational eps_n = eps * n;
  const long en = floor_rat(eps_n).get_si();
  const long N = ceil_rat((1 + 10 / a) * eps_n + 2).get_si();

  std::vector<std::pair<Rational, Rational>> nodes;
  nodes.reserve(N + 1);
  for (long x = 0; x <= en; x++) {
    Rational v = rat_pow(a, (unsigned long)x);
    if (x & 1) v = -v;
    nodes.emplace_back(Rational(x), v);
  }
  for (long x = en + 1; x <= N; x++) nodes.emplace_back(Rational(x), Rational(0));

  UnivariatePoly p = lagrange_interpolate(nodes);

  HelperReport rep;
  rep.N = N;
  rep.eps_n_floor = en;
  rep.a = a;
  for (const auto& [x, y] : nodes)
    if (p.eval(x) != y) rep.interpolation_ok = false;
  for (long x = en + 1; x <= n; x++) {
    Rational bound = rat_pow(a, (unsigned long)x) / 2;
    bool ok = rabs(p.eval(Rational(x))) <= bound;
    rep.bound_checks.emplace_back(x, ok);
    rep.bound_all_pass = rep.bound_all_pass && ok;
  }
  return {std::move(p), std::move(rep)};
}

std::vector<UnivariatePoly> pk_basis(long n, const Rational& alpha, int d) {
  if (sgn(alpha) == 0)
    throw InvalidParams("pk_basis needs alpha > 0; alpha = 0 has a trivial shortcut");
  if (sgn(alpha) < 0) throw InvalidParams("pk_basis needs alpha > 0");
  if (d < 0 || d > n) throw InvalidParams("pk_basis needs 0 <= d <= n");

  // C(m,i) and C(n-m,j) as polynomials in m.
  auto falling_over_fact = [](bool descending, long n, long i) {
    // C(m,i) = prod_{j<i}(m-j)/i!  or  C(n-m,i) = prod_{j<i}(n-m-j)/i!
    UnivariatePoly p = UnivariatePoly::constant(Rational(1));
    for (long j = 0; j < i; j++) {
      UnivariatePoly next;
      next.c.assign(p.c.size() + 1, Rational(0));
      Rational lin = descending ? Rational(-1) : Rational(1);
      Rational con = descending ? Rational(n - j) : Rational(-j);
      for (size_t t = 0; t < p.c.size(); t++) {
        next.c[t + 1] += p.c[t] * lin;
        next.c[t] += p.c[t] * con;
      }
      next.trim();
      p = std::move(next);
    }
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), (unsigned long)i);
    return p.scaled(Rational(1) / Rational(f));
  };

  std::vector<UnivariatePoly> cm(d + 1), cnm(d + 1);
  for (int i = 0; i <= d; i++) {
    cm[i] = falling_over_fact(false, n, i);
    cnm[i] = falling_over_fact(true, n, i);
  }

  std::vector<UnivariatePoly> basis(d + 1);
  const Rational neg_inv_alpha = Rational(-1) / alpha;
  for (int k = 0; k <= d; k++) {
    UnivariatePoly pk;
    for (int i = 0; i <= k; i++) {
      // C(m,i) * C(n-m,k-i) * (-alpha)^{-i}
      UnivariatePoly term;
      term.c.assign(cm[i].c.size() + cnm[k - i].c.size(), Rational(0));
      for (size_t s = 0; s < cm[i].c.size(); s++)
        for (size_t t = 0; t < cnm[k - i].c.size(); t++)
          term.c[s + t] += cm[i].c[s] * cnm[k - i].c[t];
      term.trim();
      pk += term.scaled(rat_pow(neg_inv_alpha, (unsigned long)i));
    }
    if (pk.degree() != k) throw Error("P_k degree defect");
    basis[k] = std::move(pk);
  }
  return basis;
}

std::vector<Rational> pk_expand(const std::vector<UnivariatePoly>& basis,
                                const UnivariatePoly& q) {
  const int d = int(basis.size()) - 1;
  if (q.degree() > d) throw InvalidParams("pk_expand: deg(Q) exceeds basis");
  UnivariatePoly r = q;
  std::vector<Rational> beta(d + 1, Rational(0));
  for (int k = d; k >= 0; k--) {
    if (r.degree() == k) {
      beta[k] = r.c[k] / basis[k].leading();
      r += basis[k].scaled(-beta[k]);
    }
    if (r.degree() >= k) throw Error("pk_expand elimination failed");
  }
  if (r.degree() >= 0) throw Error("pk_expand nonzero remainder");
  return beta;
}

}  // namespace dualdeg
