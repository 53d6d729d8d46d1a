#include "doctest.h"

#include <bit>

#include <omp.h>

#include "dualdeg/degree.hpp"
#include "dualdeg/verify.hpp"
#include "testutil.hpp"

using namespace dualdeg;

namespace {

// Independent oracle for the degree-1 minimax error of a 2-bit total
// function: enumerate vertices of {(c0,c1,c2,eps)} defined by active
// constraints among |p(x) - f(x)| <= eps and take the best feasible one.
Rational minimax_deg1_vertex_enum(const PartialBoolFn& f) {
  struct Con {
    Rational a[4];
    Rational b;
  };
  std::vector<Con> cons;
  for (Point x = 0; x < 4; x++) {
    Rational fv = f.value_of(x);
    for (int s : {+1, -1}) {
      Con c;
      c.a[0] = Rational(s);
      c.a[1] = Rational(s * int(x & 1));
      c.a[2] = Rational(s * int((x >> 1) & 1));
      c.a[3] = Rational(-1);
      c.b = Rational(s) * fv;
      cons.push_back(c);
    }
  }
  const int m = (int)cons.size();
  Rational best;
  bool found = false;
  for (int i = 0; i < m; i++)
    for (int j = i + 1; j < m; j++)
      for (int k = j + 1; k < m; k++)
        for (int l = k + 1; l < m; l++) {
          int idx[4] = {i, j, k, l};
          // solve the 4x4 system by Gaussian elimination
          Rational A[4][5];
          for (int r = 0; r < 4; r++) {
            for (int c = 0; c < 4; c++) A[r][c] = cons[idx[r]].a[c];
            A[r][4] = cons[idx[r]].b;
          }
          bool singular = false;
          for (int c = 0; c < 4 && !singular; c++) {
            int piv = -1;
            for (int r = c; r < 4; r++)
              if (sgn(A[r][c]) != 0) {
                piv = r;
                break;
              }
            if (piv < 0) {
              singular = true;
              break;
            }
            std::swap(A[c], A[piv]);
            for (int r = 0; r < 4; r++) {
              if (r == c || sgn(A[r][c]) == 0) continue;
              Rational fct = A[r][c] / A[c][c];
              for (int t = c; t <= 4; t++) A[r][t] -= fct * A[c][t];
            }
          }
          if (singular) continue;
          Rational sol[4];
          for (int r = 0; r < 4; r++) sol[r] = A[r][4] / A[r][r];
          bool feas = true;
          for (const auto& c : cons) {
            Rational lhs(0);
            for (int t = 0; t < 4; t++) lhs += c.a[t] * sol[t];
            if (lhs > c.b) {
              feas = false;
              break;
            }
          }
          if (!feas) continue;
          if (!found || sol[3] < best) best = sol[3];
          found = true;
        }
  REQUIRE(found);
  return best;
}

}  // namespace

TEST_CASE("single variable is exactly degree 1") {
  PartialBoolFn f = PartialBoolFn::explicit_fn(2, {0, 1, 0, 1});  // f = x1
  auto r = approx_degree(f, rat(1, 3));
  CHECK(r.degree == 1);
  CHECK(r.primal_value == 0);
}

TEST_CASE("XOR2 approximate degree with vertex-enumeration oracle") {
  auto f = make_xor(2);
  CHECK(minimax_deg1_vertex_enum(f) == rat(1, 2));
  CHECK(approx_primal_level(f, 1).value == rat(1, 2));

  auto r = approx_degree(f, rat(1, 3));
  CHECK(r.degree == 2);
  REQUIRE(r.dual.has_value());
  CHECK(pure_high_degree(*r.dual) == 1);
  for (Point x = 0; x < 4; x++) CHECK(rabs(r.dual->at(x)) == rat(1, 4));
  CHECK(*r.dual_value == rat(1, 2));
}

TEST_CASE("parity needs full degree at any eps below 1/2") {
  auto f = make_xor(3);
  for (const Rational& eps : {Rational(0), rat(1, 4), rat(49, 100)}) {
    auto r = approx_degree(f, eps);
    CHECK(r.degree == 3);
  }
  auto r = approx_degree(f, rat(49, 100));
  CHECK(*r.dual_value == rat(1, 2));
}

TEST_CASE("one-sided degree of OR2") {
  auto f = make_or(2);
  auto r = onesided_degree(f, rat(1, 3));
  CHECK(r.degree == 1);
  CHECK(r.primal_value <= rat(1, 3));

  // The explicit witness p = (2/3)(x1+x2) meets every inequality at 1/3,
  // with equality on the domain.
  MultilinearPoly p;
  p.arity = 2;
  p.set(0b01, rat(2, 3));
  p.set(0b10, rat(2, 3));
  CHECK(p.eval(0b00) == 0);
  CHECK(rabs(p.eval(0b01) - 1) == rat(1, 3));
  CHECK(rabs(p.eval(0b10) - 1) == rat(1, 3));
  CHECK(rabs(p.eval(0b11) - 1) == rat(1, 3));
}

TEST_CASE("one-sided degree of complement of PTP4") {
  auto f = complement(make_ptp(4));
  auto r = onesided_degree(f, rat(1, 3), SolverMode::FloatPresolveExactVerify);
  CHECK(r.degree >= 1);
  // regression baseline for this implementation
  CHECK(r.degree == 4);
  REQUIRE(r.dual.has_value());
  CHECK(*r.dual_value == rat(1, 2));
}

TEST_CASE("one-sided with empty zero set") {
  auto f = make_const(2, 1);
  auto r = onesided_degree(f, Rational(0));
  CHECK(r.degree == 0);
}

TEST_CASE("threshold degrees of landmarks") {
  CHECK(threshold_degree(make_and(3)).degree == 1);
  CHECK(threshold_degree(make_xor(3)).degree == 3);
  CHECK(threshold_degree(make_const(3, 1)).degree == 0);
  CHECK_THROWS_AS(threshold_degree(PartialBoolFn::empty_fn(2)), EmptyDomain);
}

TEST_CASE("no degree-2 sign pattern matches parity") {
  // LP-oracle sweep over all 3-bit sign patterns: the patterns representable
  // at degree 2 never include parity or its complement.
  auto parity = make_xor(3);
  auto coparity = complement(parity);
  for (uint32_t pat = 0; pat < 256; pat++) {
    std::vector<uint8_t> table(8);
    for (int x = 0; x < 8; x++) table[x] = uint8_t((pat >> x) & 1);
    auto f = PartialBoolFn::explicit_fn(3, std::move(table));
    bool deg2 = sgn(threshold_primal_margin(f, 2)) > 0;
    if (f.table == parity.table || f.table == coparity.table)
      CHECK_FALSE(deg2);
    else
      CHECK(deg2);
  }
}

TEST_CASE("strong duality holds level by level") {
  auto g = testutil::rng(41);
  for (int trial = 0; trial < 12; trial++) {
    auto f = testutil::rand_partial_fn(g, 3);
    for (int d = 0; d <= 2; d++) {
      auto pv = approx_primal_level(f, d);
      if (!pv.unbounded) CHECK(pv.value == approx_dual_level(f, d));
      CHECK(threshold_primal_margin(f, d) == threshold_dual_lambda(f, d));
      if (f.domain_size() > 0) {
        auto ov = onesided_primal_level(f, d);
        if (!ov.unbounded) CHECK(ov.value == onesided_dual_level(f, d));
      }
    }
  }
}

TEST_CASE("measure monotonicity and complement symmetry") {
  auto g = testutil::rng(42);
  Rational third = rat(1, 3);
  for (int trial = 0; trial < 10; trial++) {
    auto f = testutil::rand_partial_fn(g, 3, false);
    int td = threshold_degree(f).degree;
    int od = onesided_degree(f, third).degree;
    int ad = approx_degree(f, third).degree;
    CHECK(td <= od);
    CHECK(od <= ad);
    CHECK(approx_degree(f, rat(1, 6)).degree >= ad);
    CHECK(approx_degree(f, Rational(0)).degree >= approx_degree(f, rat(1, 6)).degree);
    auto fc = complement(f);
    CHECK(approx_degree(fc, third).degree == ad);
    CHECK(threshold_degree(fc).degree == td);
  }
}

TEST_CASE("convention change halves the approximation constant") {
  auto g = testutil::rng(43);
  std::vector<PartialBoolFn> fns;
  for (int m = 1; m <= 2; m++)
    for (uint32_t pat = 0; pat < (uint32_t(1) << (1 << m)); pat++) {
      std::vector<uint8_t> table(size_t(1) << m);
      for (size_t x = 0; x < table.size(); x++) table[x] = uint8_t((pat >> x) & 1);
      fns.push_back(PartialBoolFn::explicit_fn(m, std::move(table)));
    }
  for (int trial = 0; trial < 20; trial++) fns.push_back(testutil::rand_partial_fn(g, 3, false));

  for (const auto& f : fns)
    for (const Rational& eps : {Rational(0), rat(1, 6), rat(1, 3)}) {
      auto pm = convert_convention(f);
      CHECK(approx_degree(pm, 2 * eps).degree == approx_degree(f, eps).degree);
    }
}

TEST_CASE("threshold degree is convention invariant") {
  auto g = testutil::rng(45);
  for (int trial = 0; trial < 10; trial++) {
    auto f = testutil::rand_partial_fn(g, 3);
    if (f.domain_size() == 0) continue;
    CHECK(threshold_degree(f).degree ==
          threshold_degree(convert_convention(f)).degree);
  }
}

TEST_CASE("decompose_dual on the parity witness") {
  auto f = make_xor(3);
  auto r = approx_degree(f, rat(49, 100));
  auto [parts, rep] = decompose_dual(*r.dual, f, r.degree - 1, rat(49, 100), false);
  CHECK(rep.all_pass);
  CHECK(rep.norm_plus == rat(1, 2));
  CHECK(rep.norm_minus == rat(1, 2));
  CHECK(rep.norm_plus1 == rat(1, 2));
  CHECK(rep.norm_plus1 > rat(49, 100));

  auto os = onesided_degree(make_or(2), rat(1, 3));
  REQUIRE(os.dual.has_value());
  auto [p2, rep2] = decompose_dual(*os.dual, make_or(2), os.degree - 1, rat(1, 3), true);
  CHECK(rep2.all_pass);
  REQUIRE(rep2.onesided_plus1_is_half.has_value());
  CHECK(*rep2.onesided_plus1_is_half);

  CubeFn junk(3);
  junk.at(0) = 1;
  CHECK_THROWS_AS(decompose_dual(junk, f, 1, rat(1, 3), false), NotADualWitness);
}

TEST_CASE("query bounds") {
  auto qb = query_bounds(make_xor(3));
  CHECK(qb.upp_dt == 3);
  CHECK(qb.pp_dt_lower == 1);  // largest d with full degree above 1/2 - 2^-d is 2
  auto qc = query_bounds(make_const(2, 1));
  CHECK(qc.upp_dt == 0);
  CHECK(qc.pp_dt_lower == 0);
  auto qx = query_bounds(make_xor(2));
  CHECK(qx.pp_dt_lower == rat(1, 2));
  CHECK(query_bounds(make_maj(3)).upp_dt == 1);
}

TEST_CASE("independent degree searches run concurrently") {
  DegreeResult a, b;
#pragma omp parallel sections
  {
#pragma omp section
    a = approx_degree(make_xor(3), rat(1, 3));
#pragma omp section
    b = threshold_degree(make_maj(3));
  }
  CHECK(a.degree == 3);
  CHECK(b.degree == 1);
}

TEST_CASE("float presolve reproduces exact degree results") {
  auto g = testutil::rng(44);
  for (int trial = 0; trial < 6; trial++) {
    auto f = testutil::rand_partial_fn(g, 3);
    auto a = approx_degree(f, rat(1, 3), SolverMode::Exact);
    auto b = approx_degree(f, rat(1, 3), SolverMode::FloatPresolveExactVerify);
    CHECK(a.degree == b.degree);
    CHECK(a.primal_value == b.primal_value);
  }
}
