#include "doctest.h"

#include <bit>

#include "dualdeg/polylib.hpp"
#include "testutil.hpp"

using namespace dualdeg;

namespace {

CubeFn parity_sign(int m, const Rational& scale) {
  CubeFn c(m);
  for (Point x = 0; x < c.cube_size(); x++)
    c.at(x) = (std::popcount(x) & 1) ? Rational(-scale) : scale;
  return c;
}

// Barycentric evaluation straight from the node data; independent of the
// coefficient-producing path under test.
Rational lagrange_eval_direct(const std::vector<std::pair<Rational, Rational>>& nodes,
                              const Rational& at) {
  Rational total(0);
  for (size_t i = 0; i < nodes.size(); i++) {
    Rational term = nodes[i].second;
    for (size_t j = 0; j < nodes.size(); j++) {
      if (j == i) continue;
      term *= (at - nodes[j].first) / (nodes[i].first - nodes[j].first);
    }
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("inner products") {
  CubeFn zero(3);
  MultilinearPoly one;
  one.arity = 3;
  one.set(0, Rational(1));
  CHECK(inner_product(zero, one) == 0);

  CubeFn unif(3);
  for (auto& v : unif.values) v = rat(1, 8);
  CHECK(inner_product(unif, one) == 1);

  CubeFn ps = parity_sign(2, rat(1, 4));
  MultilinearPoly x1;
  x1.arity = 2;
  x1.set(0b01, Rational(1));
  CHECK(inner_product(ps, x1) == 0);

  MultilinearPoly wrong;
  wrong.arity = 2;
  CHECK_THROWS_AS(inner_product(zero, wrong), ArityError);
}

TEST_CASE("inner product is bilinear") {
  auto g = testutil::rng(20);
  for (int trial = 0; trial < 10; trial++) {
    CubeFn psi = testutil::rand_cubefn(g, 3);
    MultilinearPoly p, q, combo;
    p.arity = q.arity = combo.arity = 3;
    for (uint32_t mono = 0; mono < 8; mono++) {
      p.set(mono, testutil::rand_rational(g));
      q.set(mono, testutil::rand_rational(g));
    }
    Rational a = testutil::rand_rational(g), b = testutil::rand_rational(g);
    for (uint32_t mono = 0; mono < 8; mono++) {
      Rational pc = p.coeffs.count(mono) ? p.coeffs[mono] : Rational(0);
      Rational qc = q.coeffs.count(mono) ? q.coeffs[mono] : Rational(0);
      combo.set(mono, a * pc + b * qc);
    }
    CHECK(inner_product(psi, combo) ==
          a * inner_product(psi, p) + b * inner_product(psi, q));
  }
}

TEST_CASE("pure high degree on landmarks") {
  CubeFn unif(3);
  for (auto& v : unif.values) v = rat(1, 8);
  CHECK(pure_high_degree(unif) == -1);

  for (int m = 1; m <= 6; m++) {
    CubeFn ps = parity_sign(m, Rational(1));
    CHECK(pure_high_degree(ps) == m - 1);
    CHECK(testutil::phd_naive(ps) == m - 1);
  }

  CubeFn zero(4);
  CHECK(pure_high_degree(zero) == 4);
}

TEST_CASE("transform matches naive monomial enumeration") {
  auto g = testutil::rng(21);
  for (int trial = 0; trial < 50; trial++) {
    CubeFn c = testutil::rand_cubefn(g, 2 + int(trial % 4));
    CHECK(pure_high_degree(c) == testutil::phd_naive(c));
  }
}

TEST_CASE("pure high degree is scale invariant") {
  auto g = testutil::rng(22);
  for (int trial = 0; trial < 20; trial++) {
    CubeFn c = testutil::rand_cubefn(g, 4);
    Rational s = testutil::rand_rational(g);
    if (sgn(s) == 0) s = rat(7, 3);
    CubeFn cs = c;
    for (auto& v : cs.values) v *= s;
    CHECK(pure_high_degree(cs) == pure_high_degree(c));
  }
}

TEST_CASE("low monomial sums agree with direct summation") {
  auto g = testutil::rng(23);
  for (int trial = 0; trial < 10; trial++) {
    CubeFn c = testutil::rand_cubefn(g, 5);
    for (const auto& [mono, sum] : low_monomial_sums(c, 2)) {
      Rational direct(0);
      for (Point x = 0; x < c.cube_size(); x++)
        if ((x & mono) == mono) direct += c.at(x);
      CHECK(sum == direct);
    }
  }
}

TEST_CASE("lagrange interpolation basics") {
  auto line = lagrange_interpolate({{Rational(0), Rational(1)}, {Rational(1), Rational(-1)}});
  CHECK(line.c == std::vector<Rational>{Rational(1), Rational(-2)});

  auto constant = lagrange_interpolate({{Rational(0), Rational(1)}});
  CHECK(constant.c == std::vector<Rational>{Rational(1)});

  CHECK_THROWS_AS(lagrange_interpolate(
                      {{Rational(0), Rational(1)}, {Rational(0), Rational(2)}}),
                  DegenerateNodes);
}

TEST_CASE("geometric nodes extrapolate to 37") {
  std::vector<std::pair<Rational, Rational>> nodes{
      {Rational(0), Rational(1)}, {Rational(1), Rational(-3)}, {Rational(2), Rational(9)}};
  auto p = lagrange_interpolate(nodes);
  for (const auto& [x, y] : nodes) CHECK(p.eval(x) == y);
  CHECK(lagrange_eval_direct(nodes, Rational(3)) == 37);
  CHECK(p.eval(Rational(3)) == 37);
}

TEST_CASE("helper polynomial interpolation and degree") {
  Rational a(40);
  auto [p, rep] = helper_p(a, 10, rat(3, 5));
  CHECK(rep.interpolation_ok);
  CHECK(p.eval(Rational(0)) == 1);
  CHECK(p.eval(Rational(1)) == -40);
  CHECK(Rational(p.degree()) <= (1 + Rational(10) / a) * rat(3, 5) * 10 + 3);
  CHECK(rep.eps_n_floor == 6);

  CHECK_THROWS_AS(helper_p(a, 10, rat(1, 2)), InvalidParams);
  CHECK_THROWS_AS(helper_p(rat(1, 2), 10, rat(3, 5)), InvalidParams);
}

TEST_CASE("helper equals its indicator-basis expansion") {
  Rational a(40);
  long n = 5;
  auto [p, rep] = helper_p(a, n, rat(3, 5));
  // P = sum over interpolation points i of e_i * (-a)^i with e_i the
  // indicator polynomial on the node set {0..N}.
  UnivariatePoly sum;
  for (long i = 0; i <= rep.eps_n_floor; i++) {
    std::vector<std::pair<Rational, Rational>> nodes;
    for (long x = 0; x <= rep.N; x++)
      nodes.emplace_back(Rational(x), Rational(x == i ? 1 : 0));
    Rational w = rat_pow(a, (unsigned long)i);
    if (i & 1) w = -w;
    sum += lagrange_interpolate(nodes).scaled(w);
  }
  CHECK(sum.c == p.c);
}

TEST_CASE("pk basis shape and expansion") {
  Rational alpha = rat(1, 50);
  long n = 8;
  auto basis = pk_basis(n, alpha, 3);
  CHECK(basis.size() == 4);
  CHECK(basis[0].c == std::vector<Rational>{Rational(1)});
  for (int k = 0; k <= 3; k++) {
    CHECK(basis[k].degree() == k);
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), (unsigned long)k);
    Rational want = rat_pow(1 + Rational(1) / alpha, (unsigned long)k) / Rational(fact);
    if (k & 1) want = -want;
    CHECK(basis[k].leading() == want);
  }

  auto beta = pk_expand(basis, basis[2]);
  CHECK(beta == std::vector<Rational>{Rational(0), Rational(0), Rational(1), Rational(0)});

  auto g = testutil::rng(24);
  for (int trial = 0; trial < 10; trial++) {
    UnivariatePoly q;
    for (int i = 0; i <= 3; i++) q.c.push_back(testutil::rand_rational(g));
    q.trim();
    auto b = pk_expand(basis, q);
    for (long m = 0; m <= n; m++) {
      Rational direct = q.eval(Rational(m));
      Rational viabasis(0);
      for (size_t k = 0; k < basis.size(); k++)
        viabasis += b[k] * basis[k].eval(Rational(m));
      CHECK(direct == viabasis);
    }
  }

  CHECK_THROWS_AS(pk_basis(n, Rational(0), 2), InvalidParams);
}
