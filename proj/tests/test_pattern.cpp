#include "doctest.h"

#include <algorithm>
#include <bit>

#include "dualdeg/degree.hpp"
#include "dualdeg/pattern.hpp"
#include "testutil.hpp"

using namespace dualdeg;

TEST_CASE("pattern matrix dimensions and entries") {
  auto phi = convert_convention(make_xor(2));
  auto m = pattern_matrix(phi, 4, 2);
  CHECK(m.rows == 16);
  CHECK(m.cols == 16);

  // single choice per block: entries are phi(x ^ w)
  auto m1 = pattern_matrix(phi, 2, 2);
  CHECK(m1.rows == 4);
  CHECK(m1.cols == 4);
  for (long r = 0; r < 4; r++)
    for (long c = 0; c < 4; c++) {
      uint32_t u = uint32_t(r) ^ m1.shift_of(c);
      int want = phi.at(u) == Val::One ? -1 : 1;
      CHECK(int(m1.at(r, c)) == want);
    }

  // total phi leaves no zero entries
  for (const auto& e : m.entries) CHECK(e != 0);

  // partial phi marks undefined points with 0
  auto col = convert_convention(make_col(4, 2));
  auto mp = pattern_matrix(col, 8, 8, uint64_t(1) << 30);
  bool has_zero = false;
  for (const auto& e : mp.entries) has_zero |= (e == 0);
  CHECK(has_zero);

  CHECK_THROWS_AS(pattern_matrix(phi, 6, 2, 16), TooLarge);
  CHECK_THROWS_AS(pattern_matrix(phi, 5, 2), InvalidParams);
}

TEST_CASE("lazy entries match the dense matrix and work past the cap") {
  auto phi = convert_convention(make_xor(2));
  auto m = pattern_matrix(phi, 4, 2);
  for (long r = 0; r < m.rows; r++)
    for (long c = 0; c < m.cols; c++)
      CHECK(pattern_entry(phi, 4, 2, r, c) == m.at(r, c));
  // beyond any reasonable dense cap
  CHECK(pattern_entry(phi, 20, 2, (uint64_t(1) << 19) | 3, 41) != 0);
}

TEST_CASE("orthogonalizing distribution of the parity witness") {
  auto h = convert_convention(make_xor(3));
  // threshold dual in the +-1 view: psi agreeing in sign with h
  CubeFn psi(3);
  for (Point x = 0; x < 8; x++)
    psi.at(x) = (std::popcount(x) & 1) ? rat(-1, 8) : rat(1, 8);
  auto [mu, d] = orthogonalizing_distribution(psi, h);
  CHECK(d == 2);
  for (Point x = 0; x < 8; x++) CHECK(mu.at(x) == rat(1, 8));

  // single-point witness against the constant-TRUE function
  auto one = convert_convention(make_const(2, 1));
  CubeFn point(2);
  point.at(0b01) = Rational(-1);
  auto [mu2, d2] = orthogonalizing_distribution(point, one);
  CHECK(d2 == -1);
  CHECK(mu2.at(0b01) == 1);

  CubeFn wrong(3);
  for (Point x = 0; x < 8; x++) wrong.at(x) = rat(1, 8);
  CHECK_THROWS_AS(orthogonalizing_distribution(wrong, h), NotOrthogonalizing);
}

TEST_CASE("orthogonalizing d matches the witness pure high degree") {
  auto f = convert_convention(make_maj(3));
  auto r = threshold_degree(f);
  REQUIRE(r.dual.has_value());
  auto [mu, d] = orthogonalizing_distribution(*r.dual, f);
  CHECK(d == pure_high_degree(*r.dual));
  CHECK(d >= r.degree - 1);
  Rational total(0);
  for (const auto& v : mu.values) {
    CHECK(sgn(v) >= 0);
    total += v;
  }
  CHECK(total == 1);
}

TEST_CASE("PTP symmetrization") {
  CHECK(symmetrize_ptp({1, 2, 3}) == std::vector<long>{1, 1, 1});
  CHECK(symmetrize_ptp({1, 1, 1}) == std::vector<long>{0, 0, 3});
  CHECK(symmetrize_ptp({1, 1, 2}) == std::vector<long>{0, 1, 2});
  CHECK_THROWS_AS(symmetrize_ptp({1, 5, 2}), InvalidInput);

  auto g = testutil::rng(71);
  for (int trial = 0; trial < 30; trial++) {
    std::vector<long> f(5);
    for (auto& v : f) v = 1 + long(g() % 5);
    auto base = symmetrize_ptp(f);
    // invariant under permuting coordinates
    std::vector<long> shuffled = f;
    std::shuffle(shuffled.begin(), shuffled.end(), g);
    CHECK(symmetrize_ptp(shuffled) == base);
    // and under relabeling output values
    std::vector<long> relabel{3, 5, 1, 2, 4};
    std::vector<long> mapped(5);
    for (int i = 0; i < 5; i++) mapped[i] = relabel[f[i] - 1];
    CHECK(symmetrize_ptp(mapped) == base);
  }
}

TEST_CASE("smoothness report fractions") {
  CubeFn unif(4);
  for (auto& v : unif.values) v = rat(1, 16);
  auto rep = smoothness_report(unif, 3, rat(1, 1));
  CHECK(rep.fraction == 0);

  CubeFn point(4);
  point.at(5) = 1;
  auto rp = smoothness_report(point, 1, Rational(1));
  CHECK(rp.fraction == rat(15, 16));

  // fractional alpha*d exercises the root-free comparison
  CubeFn half(2);
  half.at(0) = rat(3, 4);
  half.at(1) = rat(1, 4);
  auto rh = smoothness_report(half, 1, rat(1, 2));
  CHECK(rh.threshold_log2 == rat(5, 2));
  // 2^-5/2 = 0.176..; masses 3/4, 1/4 above, two zeros below
  CHECK(rh.fraction == rat(1, 2));
}

TEST_CASE("sign factorization checking") {
  auto phi = convert_convention(make_xor(2));
  auto m = pattern_matrix(phi, 2, 2);

  // U = M, V = I is always a valid factorization
  std::vector<std::vector<Rational>> u(m.rows), v(m.cols);
  for (long r = 0; r < m.rows; r++) {
    u[r].assign(m.cols, Rational(0));
    for (long c = 0; c < m.cols; c++) u[r][c] = Rational(m.at(r, c));
  }
  for (long c = 0; c < m.cols; c++) {
    v[c].assign(m.cols, Rational(0));
    v[c][c] = 1;
  }
  CHECK(verify_sign_factorization(m, u, v));

  // rank-1 all-ones factors cannot match a sign-nonsingular 2x2 block
  std::vector<std::vector<Rational>> u1(m.rows, {Rational(1)});
  std::vector<std::vector<Rational>> v1(m.cols, {Rational(1)});
  CHECK_FALSE(verify_sign_factorization(m, u1, v1));

  SignMatrix ones;
  ones.N = 1;
  ones.n = 1;
  ones.rows = 2;
  ones.cols = 2;
  ones.entries = {1, 1, 1, 1};
  std::vector<std::vector<Rational>> uo(2, {Rational(1)}), vo(2, {Rational(1)});
  CHECK(verify_sign_factorization(ones, uo, vo));
}
