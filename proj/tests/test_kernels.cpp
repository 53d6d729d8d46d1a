#include "doctest.h"

#include "dualdeg/kernels.hpp"
#include "dualdeg/polylib.hpp"
#include "testutil.hpp"

using namespace dualdeg;

TEST_CASE("serial and parallel superset sums agree exactly") {
  auto g = testutil::rng(91);
  for (int m : {3, 6, 10}) {
    CubeFn c = testutil::rand_cubefn(g, m);
    auto a = c.values;
    auto b = c.values;
    superset_sum_serial(a, m);
    superset_sum_parallel(b, m);
    CHECK(a == b);
  }
}

TEST_CASE("superset sum computes superset sums") {
  auto g = testutil::rng(92);
  CubeFn c = testutil::rand_cubefn(g, 4);
  auto t = c.values;
  superset_sum_serial(t, 4);
  for (uint32_t s = 0; s < 16; s++) {
    Rational direct(0);
    for (Point x = 0; x < 16; x++)
      if ((x & s) == s) direct += c.at(x);
    CHECK(t[s] == direct);
  }
}

TEST_CASE("correlation sweeps agree across variants") {
  auto g = testutil::rng(93);
  for (int m : {4, 9}) {
    CubeFn c = testutil::rand_cubefn(g, m);
    auto f = testutil::rand_partial_fn(g, m);
    std::vector<Rational> vals{Rational(0), Rational(1)};
    auto a = correlation_sweep_serial(c.values, f.table, vals);
    auto b = correlation_sweep_parallel(c.values, f.table, vals);
    CHECK(a.on_domain == b.on_domain);
    CHECK(a.off_abs == b.off_abs);
    CHECK(a.l1 == b.l1);
    CHECK(a.l1 == c.l1_norm());
  }
}
