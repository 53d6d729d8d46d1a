#include "doctest.h"

#include "dualdeg/lp.hpp"
#include "testutil.hpp"

using namespace dualdeg;

namespace {

LPInstance single_var() {
  LPInstance lp;
  lp.num_vars = 1;
  lp.maximize = true;
  lp.objective = {Rational(1)};
  lp.nonneg = {false};
  return lp;
}

}  // namespace

TEST_CASE("bounded maximization") {
  LPInstance lp = single_var();
  lp.rows.push_back({{Rational(1)}, Rel::LE, Rational(3)});
  auto sol = solve_lp(lp);
  CHECK(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == 3);
  CHECK(sol.x[0] == 3);
}

TEST_CASE("infeasible system yields a verified Farkas certificate") {
  LPInstance lp = single_var();
  lp.rows.push_back({{Rational(1)}, Rel::LE, Rational(1)});
  lp.rows.push_back({{Rational(1)}, Rel::GE, Rational(2)});
  auto sol = solve_lp(lp);
  CHECK(sol.status == LPStatus::Infeasible);
  REQUIRE(sol.farkas.has_value());
  CHECK(lp_farkas_valid(lp, *sol.farkas));
}

TEST_CASE("unbounded detection") {
  LPInstance lp = single_var();
  lp.rows.push_back({{Rational(1)}, Rel::GE, Rational(0)});
  auto sol = solve_lp(lp);
  CHECK(sol.status == LPStatus::Unbounded);
}

TEST_CASE("Beale's cycling example terminates at -1/20") {
  // min -3/4 x1 + 150 x2 - 1/50 x3 + 6 x4, the classic degenerate instance.
  LPInstance lp;
  lp.num_vars = 4;
  lp.maximize = false;
  lp.objective = {rat(-3, 4), Rational(150), rat(-1, 50), Rational(6)};
  lp.nonneg = {true, true, true, true};
  lp.rows.push_back(
      {{rat(1, 4), Rational(-60), rat(-1, 25), Rational(9)}, Rel::LE, Rational(0)});
  lp.rows.push_back(
      {{rat(1, 2), Rational(-90), rat(-1, 50), Rational(3)}, Rel::LE, Rational(0)});
  lp.rows.push_back(
      {{Rational(0), Rational(0), Rational(1), Rational(0)}, Rel::LE, Rational(1)});
  auto sol = solve_lp(lp);
  CHECK(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == rat(-1, 20));

  // Cross-check against the float-presolved route; the exact phase must
  // reproduce the same optimum.
  auto sol2 = solve_lp(lp, SolverMode::FloatPresolveExactVerify);
  CHECK(sol2.status == LPStatus::Optimal);
  CHECK(sol2.objective == rat(-1, 20));
}

TEST_CASE("equality rows and free variables") {
  // max x + y subject to x + y = 2, x - y <= 1, y free
  LPInstance lp;
  lp.num_vars = 2;
  lp.maximize = true;
  lp.objective = {Rational(1), Rational(1)};
  lp.nonneg = {true, false};
  lp.rows.push_back({{Rational(1), Rational(1)}, Rel::EQ, Rational(2)});
  lp.rows.push_back({{Rational(1), Rational(-1)}, Rel::LE, Rational(1)});
  auto sol = solve_lp(lp);
  CHECK(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == 2);
}

TEST_CASE("random instances agree across solver modes") {
  auto g = testutil::rng(31);
  std::uniform_int_distribution<int> nv(1, 4), nr(1, 5), rel(0, 2);
  for (int trial = 0; trial < 40; trial++) {
    LPInstance lp;
    lp.num_vars = nv(g);
    lp.maximize = trial % 2 == 0;
    for (int j = 0; j < lp.num_vars; j++) {
      lp.objective.push_back(testutil::rand_rational(g));
      lp.nonneg.push_back(g() % 2 == 0);
    }
    int rows = nr(g);
    for (int i = 0; i < rows; i++) {
      LPRow row;
      for (int j = 0; j < lp.num_vars; j++) row.a.push_back(testutil::rand_rational(g));
      row.rel = Rel(rel(g));
      row.b = testutil::rand_rational(g);
      lp.rows.push_back(std::move(row));
    }
    auto a = solve_lp(lp, SolverMode::Exact);
    auto b = solve_lp(lp, SolverMode::FloatPresolveExactVerify);
    CHECK(a.status == b.status);
    if (a.status == LPStatus::Optimal) CHECK(a.objective == b.objective);
    if (a.status == LPStatus::Infeasible) {
      CHECK(lp_farkas_valid(lp, *a.farkas));
      CHECK(lp_farkas_valid(lp, *b.farkas));
    }
  }
}

TEST_CASE("malformed instances are rejected") {
  LPInstance lp = single_var();
  lp.rows.push_back({{Rational(1), Rational(2)}, Rel::LE, Rational(1)});
  CHECK_THROWS_AS(solve_lp(lp), MalformedLP);
}
