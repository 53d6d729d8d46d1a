#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "dualdeg/boolfn.hpp"
#include "testutil.hpp"

using namespace dualdeg;

namespace {

// Oracle: least disagreement of f with any permutation of [n], by full search.
long min_perm_disagreement(const std::vector<long>& f, long n) {
  std::vector<long> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  long best = n + 1;
  do {
    long dis = 0;
    for (long i = 0; i < n; i++)
      if (f[i] != perm[i]) dis++;
    best = std::min(best, dis);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Point blocks2(std::initializer_list<int> vals) {
  // packs 2-bit blocks; value 1 encoded as 01, value 0 as 00
  Point x = 0;
  int i = 0;
  for (int v : vals) x |= Point(v ? 1 : 0) << (2 * i++);
  return x;
}

}  // namespace

TEST_CASE("COL(4,2) promise values") {
  auto col = make_col(4, 2);
  CHECK(col.arity == 8);
  CHECK(col.at(encode_map({1, 2, 3, 4}, 4)) == Val::One);
  CHECK(col.at(encode_map({2, 1, 4, 3}, 4)) == Val::One);
  CHECK(col.at(encode_map({1, 1, 2, 2}, 4)) == Val::Zero);
  CHECK(col.at(encode_map({1, 1, 2, 3}, 4)) == Val::Undef);
  CHECK_THROWS_AS(make_col(4, 3), InvalidParams);
  CHECK_THROWS_AS(make_col(6, 2), InvalidParams);
  CHECK_THROWS_AS(make_col(16, 2), TooLarge);  // 16*4 = 64 bits
}

TEST_CASE("PTP zero rule equals permutation-distance brute force") {
  auto ptp4 = make_ptp(4);
  for (long a = 1; a <= 4; a++)
    for (long b = 1; b <= 4; b++)
      for (long c = 1; c <= 4; c++)
        for (long d = 1; d <= 4; d++) {
          std::vector<long> f{a, b, c, d};
          long dis = min_perm_disagreement(f, 4);
          Val v = ptp4.at(encode_map(f, 4));
          // n/8 = 1/2, so ZERO iff disagreement >= 1/2 iff f is not a permutation
          if (dis == 0)
            CHECK(v == Val::One);
          else
            CHECK(v == Val::Zero);
          CHECK((8 * dis >= 4) == (v == Val::Zero));
        }
}

TEST_CASE("PTP(8) constant map is a NO instance") {
  auto ptp8 = make_ptp(8);
  std::vector<long> f(8, 1);
  CHECK(ptp8.at(encode_map(f, 8)) == Val::Zero);
  CHECK(min_perm_disagreement(f, 8) == 7);
  CHECK(ptp8.at(encode_map({1, 2, 3, 4, 5, 6, 7, 8}, 8)) == Val::One);
}

TEST_CASE("gap_maj on XOR2 blocks") {
  auto f = make_xor(2);
  GapParams g{3, rat(2, 3)};
  auto F = gap_maj(f, g);
  CHECK(F.arity == 6);
  CHECK(F.at(blocks2({1, 1, 0})) == Val::One);
  CHECK(F.at(blocks2({0, 0, 1})) == Val::Zero);
  CHECK_THROWS_AS(gap_maj(f, {3, rat(1, 2)}), InvalidParams);
}

TEST_CASE("gap_maj ignores undefined blocks") {
  auto col = make_col(4, 2);
  auto F = gap_maj(col, {2, rat(3, 4)}, 24);
  Point undef_block = encode_map({1, 1, 2, 3}, 4);
  Point one_block = encode_map({1, 2, 3, 4}, 4);
  CHECK(F.at(undef_block | (one_block << 8)) == Val::Undef);
  CHECK(F.at(one_block | (one_block << 8)) == Val::One);
}

TEST_CASE("gap_and demands fully defined blocks") {
  auto f = make_xor(2);
  auto F = gap_and(f, {3, rat(2, 3)});
  CHECK(F.at(blocks2({1, 1, 1})) == Val::One);
  CHECK(F.at(blocks2({0, 0, 1})) == Val::Zero);
  CHECK(F.at(blocks2({0, 1, 1})) == Val::Undef);  // one zero, below the 2/3 cut

  auto col = make_col(4, 2);
  auto G = gap_and(col, {2, rat(1, 2)}, 24);
  Point undef_block = encode_map({1, 1, 2, 3}, 4);
  Point zero_block = encode_map({1, 1, 2, 2}, 4);
  CHECK(G.at(undef_block | (zero_block << 8)) == Val::Undef);
  CHECK(G.at(zero_block | (zero_block << 8)) == Val::Zero);
}

TEST_CASE("gap_and domain is contained in gap_maj agreement") {
  auto g = testutil::rng(11);
  for (int trial = 0; trial < 20; trial++) {
    auto f = testutil::rand_partial_fn(g, 2);
    GapParams gp{3, rat(2, 3)};
    auto Fm = gap_maj(f, gp);
    auto Fa = gap_and(f, gp);
    for (Point x = 0; x < Fm.cube_size(); x++) {
      if (Fm.at(x) != Val::Undef && Fa.at(x) != Val::Undef) CHECK(Fm.at(x) == Fa.at(x));
      if (Fa.at(x) == Val::One) CHECK(Fm.at(x) == Val::One);
    }
  }
}

TEST_CASE("gap_maj with one copy at eps=1 restricts to f") {
  auto g = testutil::rng(12);
  for (int trial = 0; trial < 20; trial++) {
    auto f = testutil::rand_partial_fn(g, 3);
    auto F = gap_maj(f, {1, Rational(1)});
    for (Point x = 0; x < f.cube_size(); x++)
      if (f.in_domain(x)) CHECK(F.at(x) == f.at(x));
  }
}

TEST_CASE("convention conversion is an involution and relabels as expected") {
  auto g = testutil::rng(13);
  for (int trial = 0; trial < 10; trial++) {
    auto f = testutil::rand_partial_fn(g, 3);
    auto back = convert_convention(convert_convention(f));
    CHECK(back.conv == f.conv);
    CHECK(back.table == f.table);
  }
  // +-1 AND2: the point (-1,-1) is mask 11, which is (1,1) in the 0/1 view.
  auto pm = convert_convention(make_and(2));
  CHECK(pm.conv == Convention::PlusMinus);
  CHECK(pm.at(0b11) == Val::One);   // f(-1,-1) = -1 (TRUE)
  CHECK(pm.at(0b00) == Val::Zero);  // f(+1,+1) = +1 (FALSE)
  CHECK(pm.value_of(0b11) == -1);
  CHECK(pm.value_of(0b00) == 1);
}

TEST_CASE("named generators and the empty function") {
  CHECK(make_and(3).at(0b111) == Val::One);
  CHECK(make_and(3).at(0b011) == Val::Zero);
  CHECK(make_or(2).at(0b00) == Val::Zero);
  CHECK(make_maj(3).at(0b110) == Val::One);
  CHECK(make_const(2, 1).domain_size() == 4);
  CHECK(PartialBoolFn::empty_fn(3).domain_size() == 0);
  CHECK_THROWS_AS(make_maj(4), InvalidParams);
  CHECK(gen_named("XOR", {{"m", 2}}).table == make_xor(2).table);
}
