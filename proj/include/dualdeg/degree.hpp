#pragma once

#include <optional>

#include "dualdeg/boolfn.hpp"
#include "dualdeg/lp.hpp"
#include "dualdeg/polylib.hpp"

namespace dualdeg {

enum class Measure { Approx, OneSided, Threshold };

struct DegreeResult {
  Measure measure = Measure::Approx;
  std::optional<Rational> eps;
  int degree = 0;
  std::optional<MultilinearPoly> primal;  // witness at `degree`
  std::optional<CubeFn> dual;             // witness at `degree - 1`
  SolverMode mode = SolverMode::Exact;
  // LP optima backing the search: primal value at `degree` and the dual
  // optimum at `degree - 1` (absent when degree == 0).
  Rational primal_value;
  std::optional<Rational> dual_value;
};

// LP optimum of one side at a fixed degree; the building blocks of the
// searches, exposed so strong duality is testable level by level.
struct LevelValue {
  bool unbounded = false;  // primal can be unbounded below (one-sided, empty 1-set)
  Rational value;
};
LevelValue approx_primal_level(const PartialBoolFn& f, int d,
                               SolverMode mode = SolverMode::Exact,
                               MultilinearPoly* witness = nullptr);
Rational approx_dual_level(const PartialBoolFn& f, int d,
                           SolverMode mode = SolverMode::Exact,
                           CubeFn* witness = nullptr);
LevelValue onesided_primal_level(const PartialBoolFn& f, int d,
                                 SolverMode mode = SolverMode::Exact,
                                 MultilinearPoly* witness = nullptr);
Rational onesided_dual_level(const PartialBoolFn& f, int d,
                             SolverMode mode = SolverMode::Exact,
                             CubeFn* witness = nullptr);
Rational threshold_primal_margin(const PartialBoolFn& f, int d,
                                 SolverMode mode = SolverMode::Exact,
                                 MultilinearPoly* witness = nullptr);
Rational threshold_dual_lambda(const PartialBoolFn& f, int d,
                               SolverMode mode = SolverMode::Exact,
                               CubeFn* witness = nullptr);

DegreeResult approx_degree(const PartialBoolFn& f, const Rational& eps,
                           SolverMode mode = SolverMode::Exact);
DegreeResult onesided_degree(const PartialBoolFn& f, const Rational& eps,
                             SolverMode mode = SolverMode::Exact);
DegreeResult threshold_degree(const PartialBoolFn& f,
                              SolverMode mode = SolverMode::Exact);

struct MuParts {
  CubeFn plus, minus;
  CubeFn plus0, plus1, minus0, minus1;
};

struct MuDecompositionReport {
  bool disjoint_supports = false;
  Rational norm_plus, norm_minus;
  bool norms_half = false;
  Rational norm_plus1, norm_minus0;
  bool plus1_above_eps = false;
  bool minus0_above_eps = false;
  std::optional<bool> onesided_plus1_is_half;
  bool all_pass = false;
};

std::pair<MuParts, MuDecompositionReport> decompose_dual(const CubeFn& mu,
                                                 const PartialBoolFn& f, int d,
                                                 const Rational& eps,
                                                 bool onesided);

struct QueryBounds {
  int upp_dt = 0;
  Rational pp_dt_lower;
};
QueryBounds query_bounds(const PartialBoolFn& f,
                         SolverMode mode = SolverMode::Exact);

}  // namespace dualdeg
