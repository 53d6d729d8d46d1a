#include "doctest.h"

#include "dualdeg/io.hpp"
#include "testutil.hpp"

using namespace dualdeg;

TEST_CASE("rational literals") {
  CHECK(rat_parse("1/3") == rat(1, 3));
  CHECK(rat_parse("-7") == Rational(-7));
  CHECK(rat_str(rat(2, 4)) == "1/2");
  CHECK(rat_str(Rational(5)) == "5");
  CHECK_THROWS_AS(rat_parse("x"), InvalidParams);
  CHECK_THROWS_AS(rat_parse("1/0"), InvalidParams);
}

TEST_CASE("bitstrings put variable one first") {
  CHECK(point_str(0b001, 3) == "100");
  CHECK(point_parse("100", 3) == 0b001);
  CHECK_THROWS_AS(point_parse("10", 3), InvalidInput);
}

TEST_CASE("function JSON round trip") {
  auto g = testutil::rng(101);
  for (int trial = 0; trial < 10; trial++) {
    auto f = testutil::rand_partial_fn(g, 3);
    auto j = fn_to_json(f);
    auto back = fn_from_json(j);
    CHECK(back.arity == f.arity);
    CHECK(back.conv == f.conv);
    CHECK(back.table == f.table);
  }

  // generator descriptors re-derive instances without entries
  auto col = make_col(4, 2);
  auto j = fn_to_json(col);
  CHECK_FALSE(j.contains("entries"));
  auto back = fn_from_json(j);
  CHECK(back.table == col.table);

  auto F = gap_maj(make_xor(2), {3, rat(2, 3)});
  auto jF = fn_to_json(F);
  CHECK(fn_from_json(jF).table == F.table);
}

TEST_CASE("cube function JSON omits zeros") {
  CubeFn c(3);
  c.at(5) = rat(-2, 3);
  auto j = cubefn_to_json(c);
  CHECK(j["values"].size() == 1);
  auto back = cubefn_from_json(j);
  CHECK(back.values == c.values);
}

TEST_CASE("polynomial and distribution JSON") {
  MultilinearPoly p;
  p.arity = 3;
  p.set(0b011, rat(1, 2));
  p.set(0, Rational(-1));
  auto back = poly_from_json(poly_to_json(p));
  CHECK(back.coeffs == p.coeffs);
  CHECK(back.conv == p.conv);

  auto d = Distribution::over({"a", "b"}, {rat(1, 3), rat(2, 3)});
  auto db = dist_from_json(dist_to_json(d));
  CHECK(db.labels == d.labels);
  CHECK(db.mass == d.mass);
}
