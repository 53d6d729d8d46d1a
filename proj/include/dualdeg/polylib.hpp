#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dualdeg/boolfn.hpp"
#include "dualdeg/rational.hpp"

namespace dualdeg {

// Exact-rational function on the m-bit cube; dense table.
struct CubeFn {
  int arity = 0;
  std::vector<Rational> values;

  CubeFn() = default;
  explicit CubeFn(int m) : arity(m), values(size_t(1) << m, Rational(0)) {}

  const Rational& at(Point x) const { return values[x]; }
  Rational& at(Point x) { return values[x]; }
  size_t cube_size() const { return size_t(1) << arity; }

  Rational l1_norm() const;
  size_t support_size() const;
  bool is_zero() const { return support_size() == 0; }
};

// Multilinear polynomial in the monomial basis of its convention: over
// ZeroOne, chi_S(x) = prod_{i in S} x_i; over PlusMinus, prod_{i in S} xi_i
// with xi_i = (-1)^{bit i}. Zero coefficients are never stored.
struct MultilinearPoly {
  int arity = 0;
  Convention conv = Convention::ZeroOne;
  std::map<uint32_t, Rational> coeffs;

  int degree() const;
  Rational eval(Point x) const;
  void set(uint32_t mono, const Rational& c);
  static Rational monomial_at(uint32_t mono, Point x, Convention conv);
};

struct UnivariatePoly {
  std::vector<Rational> c;  // c[i] multiplies x^i; trimmed, so c.back() != 0

  int degree() const { return int(c.size()) - 1; }  // -1 for the zero poly
  Rational eval(const Rational& x) const;
  Rational leading() const { return c.empty() ? Rational(0) : c.back(); }
  void trim();

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  UnivariatePoly scaled(const Rational& s) const;
  static UnivariatePoly constant(const Rational& v);
};

Rational inner_product(const CubeFn& psi, const MultilinearPoly& p);

// Largest d such that <psi, chi_S> = 0 for every |S| <= d; -1 when already
// the constant monomial correlates, m for the zero function.
int pure_high_degree(const CubeFn& psi);

// Superset sums <psi, chi_S> for all |S| <= dmax, without a full transform.
// Exact; works at any arity the values vector supports.
std::vector<std::pair<uint32_t, Rational>> low_monomial_sums(const CubeFn& psi,
                                                             int dmax);

UnivariatePoly lagrange_interpolate(
    const std::vector<std::pair<Rational, Rational>>& nodes);

struct HelperReport {
  long N = 0;                // interpolation range end, nodes are 0..N
  long eps_n_floor = 0;      // floor(eps*n)
  Rational a;
  // For each integer x in {floor(eps n)+1, ..., n}: |P(x)| <= a^x / 2 ?
  std::vector<std::pair<long, bool>> bound_checks;
  bool bound_all_pass = true;
  bool interpolation_ok = true;
};

// P interpolating (-a)^x on {0..floor(eps n)} and 0 on {floor(eps n)+1..N},
// N = ceil((1+10/a) eps n + 2). The report records the exactly-evaluated
// magnitude bound; nothing is assumed from the asymptotic statement.
std::pair<UnivariatePoly, HelperReport> helper_p(const Rational& a, long n,
                                                 const Rational& eps);

// P_k(m) = sum_{i<=k} C(m,i) C(n-m,k-i) (-alpha)^{-i}, degree exactly k.
std::vector<UnivariatePoly> pk_basis(long n, const Rational& alpha, int d);

// Solve Q = sum beta_k P_k by back-substitution on the triangular system.
std::vector<Rational> pk_expand(const std::vector<UnivariatePoly>& basis,
                                const UnivariatePoly& q);

Rational binomial(long n, long k);

}  // namespace dualdeg
