#include "dualdeg/degree.hpp"

#include <bit>

#include "dualdeg/verify.hpp"

namespace dualdeg {

namespace {

std::vector<uint32_t> monomials_upto(int m, int d) {
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < (uint32_t(1) << m); s++)
    if (std::popcount(s) <= d) out.push_back(s);
  std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

Rational chi(uint32_t mono, Point x, Convention conv) {
  return MultilinearPoly::monomial_at(mono, x, conv);
}

// Sign a threshold witness must take at x: the sign of the output value,
// so +1 on One in the 0/1 view but -1 on One (= TRUE = -1) in the +-1 view.
int sign_of(const PartialBoolFn& f, Point x) {
  bool one = f.at(x) == Val::One;
  return (f.conv == Convention::ZeroOne) == one ? 1 : -1;
}

MultilinearPoly poly_from(const PartialBoolFn& f,
                          const std::vector<uint32_t>& monos,
                          const std::vector<Rational>& coef) {
  MultilinearPoly p;
  p.arity = f.arity;
  p.conv = f.conv;
  for (size_t j = 0; j < monos.size(); j++) p.set(monos[j], coef[j]);
  return p;
}

void check_eps_range(const PartialBoolFn& f, const Rational& eps) {
  Rational limit = f.conv == Convention::ZeroOne ? rat(1, 2) : Rational(1);
  if (!(eps >= 0 && eps < limit)) throw InvalidParams("eps out of range");
}

// Exact re-checks of the defining inequalities for a candidate primal
// witness at its LP value.
bool approx_witness_ok(const PartialBoolFn& f, const MultilinearPoly& p,
                       const Rational& eps) {
  for (Point x = 0; x < f.cube_size(); x++) {
    Rational v = p.eval(x);
    if (f.in_domain(x)) {
      if (rabs(v - f.value_of(x)) > eps) return false;
    } else if (rabs(v) > 1 + eps) {
      return false;
    }
  }
  return true;
}

bool onesided_witness_ok(const PartialBoolFn& f, const MultilinearPoly& p,
                         const Rational& eps) {
  for (Point x = 0; x < f.cube_size(); x++) {
    Val fv = f.at(x);
    if (fv == Val::Undef) continue;
    Rational v = p.eval(x);
    if (fv == Val::One && rabs(v - 1) > eps) return false;
    if (fv == Val::Zero && v > eps) return false;
  }
  return true;
}

bool threshold_witness_ok(const PartialBoolFn& f, const MultilinearPoly& p,
                          const Rational& margin) {
  for (Point x = 0; x < f.cube_size(); x++) {
    if (!f.in_domain(x)) continue;
    if (Rational(sign_of(f, x)) * p.eval(x) < margin) return false;
  }
  return true;
}

}  // namespace

LevelValue approx_primal_level(const PartialBoolFn& f, int d, SolverMode mode,
                               MultilinearPoly* witness) {
  auto monos = monomials_upto(f.arity, d);
  const int k = (int)monos.size();
  LPInstance lp;
  lp.num_vars = k + 1;  // coefficients, then eps
  lp.maximize = false;
  lp.objective.assign(k + 1, Rational(0));
  lp.objective[k] = Rational(1);
  lp.nonneg.assign(k + 1, false);

  for (int j = 0; j < k; j++) lp.col_labels.push_back("c:" + std::to_string(monos[j]));
  lp.col_labels.push_back("eps");
  for (Point x = 0; x < f.cube_size(); x++) {
    bool in_dom = f.in_domain(x);
    Rational rhs = in_dom ? f.value_of(x) : Rational(1);
    for (int s : {+1, -1}) {
      LPRow row;
      row.a.assign(k + 1, Rational(0));
      for (int j = 0; j < k; j++) row.a[j] = Rational(s) * chi(monos[j], x, f.conv);
      row.a[k] = Rational(-1);
      row.rel = Rel::LE;
      row.b = in_dom ? Rational(s) * rhs : Rational(1);
      lp.rows.push_back(std::move(row));
      lp.row_labels.push_back((s > 0 ? "x+:" : "x-:") + std::to_string(x));
    }
  }
  auto sol = solve_lp(lp, mode);
  if (sol.status == LPStatus::Unbounded) return {true, Rational(0)};
  if (sol.status != LPStatus::Optimal) throw Error("approx primal infeasible");
  if (witness)
    *witness = poly_from(f, monos, std::vector<Rational>(sol.x.begin(), sol.x.begin() + k));
  return {false, sol.objective};
}

LevelValue onesided_primal_level(const PartialBoolFn& f, int d, SolverMode mode,
                                 MultilinearPoly* witness) {
  if (f.conv != Convention::ZeroOne)
    throw InvalidParams("one-sided degree expects the 0/1 convention");
  auto monos = monomials_upto(f.arity, d);
  const int k = (int)monos.size();
  LPInstance lp;
  lp.num_vars = k + 1;
  lp.maximize = false;
  lp.objective.assign(k + 1, Rational(0));
  lp.objective[k] = Rational(1);
  lp.nonneg.assign(k + 1, false);

  for (Point x = 0; x < f.cube_size(); x++) {
    Val v = f.at(x);
    if (v == Val::Undef) continue;
    auto add_row = [&](int s, const Rational& rhs) {
      LPRow row;
      row.a.assign(k + 1, Rational(0));
      for (int j = 0; j < k; j++) row.a[j] = Rational(s) * chi(monos[j], x, f.conv);
      row.a[k] = Rational(-1);
      row.rel = Rel::LE;
      row.b = rhs;
      lp.rows.push_back(std::move(row));
    };
    if (v == Val::One) {
      add_row(+1, Rational(1));
      add_row(-1, Rational(-1));
    } else {
      add_row(+1, Rational(0));
    }
  }
  if (lp.rows.empty()) return {true, Rational(0)};
  auto sol = solve_lp(lp, mode);
  if (sol.status == LPStatus::Unbounded) return {true, Rational(0)};
  if (sol.status != LPStatus::Optimal) throw Error("one-sided primal infeasible");
  if (witness)
    *witness = poly_from(f, monos, std::vector<Rational>(sol.x.begin(), sol.x.begin() + k));
  return {false, sol.objective};
}

Rational threshold_primal_margin(const PartialBoolFn& f, int d, SolverMode mode,
                                 MultilinearPoly* witness) {
  auto monos = monomials_upto(f.arity, d);
  const int k = (int)monos.size();
  LPInstance lp;
  lp.num_vars = 2 * k + 1;  // c+, c-, delta
  lp.maximize = true;
  lp.objective.assign(lp.num_vars, Rational(0));
  lp.objective[2 * k] = Rational(1);
  lp.nonneg.assign(lp.num_vars, true);
  lp.nonneg[2 * k] = false;

  for (Point x = 0; x < f.cube_size(); x++) {
    if (!f.in_domain(x)) continue;
    int s = sign_of(f, x);
    LPRow row;  // s * p(x) - delta >= 0
    row.a.assign(lp.num_vars, Rational(0));
    for (int j = 0; j < k; j++) {
      Rational v = Rational(s) * chi(monos[j], x, f.conv);
      row.a[j] = v;
      row.a[k + j] = -v;
    }
    row.a[2 * k] = Rational(-1);
    row.rel = Rel::GE;
    row.b = Rational(0);
    lp.rows.push_back(std::move(row));
  }
  {
    LPRow norm;  // sum (c+ + c-) <= 1
    norm.a.assign(lp.num_vars, Rational(1));
    norm.a[2 * k] = Rational(0);
    norm.rel = Rel::LE;
    norm.b = Rational(1);
    lp.rows.push_back(std::move(norm));
  }
  auto sol = solve_lp(lp, mode);
  if (sol.status != LPStatus::Optimal) throw Error("threshold margin LP not optimal");
  if (witness) {
    std::vector<Rational> coef(k);
    for (int j = 0; j < k; j++) coef[j] = sol.x[j] - sol.x[k + j];
    *witness = poly_from(f, monos, coef);
  }
  return sol.objective;
}

namespace {

// The dual LPs have one row per low monomial plus a norm row, so they stay
// small even when the cube is large; the searches probe levels through them
// and reconstruct primal witnesses from the row multipliers.
struct DualSolve {
  Rational value;
  CubeFn psi;
  std::vector<Rational> row_dual;  // [0] = norm row, then one per monomial
  std::vector<uint32_t> monos;
};

DualSolve solve_approx_dual(const PartialBoolFn& f, int d, SolverMode mode) {
  const size_t n = f.cube_size();
  DualSolve out;
  out.monos = monomials_upto(f.arity, d);
  LPInstance lp;
  lp.num_vars = int(2 * n);  // psi+ then psi-
  lp.maximize = true;
  lp.objective.assign(2 * n, Rational(0));
  lp.nonneg.assign(2 * n, true);
  for (Point x = 0; x < n; x++) {
    if (f.in_domain(x)) {
      Rational v = f.value_of(x);
      lp.objective[x] = v;
      lp.objective[n + x] = -v;
    } else {
      lp.objective[x] = Rational(-1);
      lp.objective[n + x] = Rational(-1);
    }
  }
  {
    LPRow norm;
    norm.a.assign(2 * n, Rational(1));
    norm.rel = Rel::EQ;
    norm.b = Rational(1);
    lp.rows.push_back(std::move(norm));
  }
  for (uint32_t mono : out.monos) {
    LPRow row;
    row.a.assign(2 * n, Rational(0));
    for (Point x = 0; x < n; x++) {
      Rational v = chi(mono, x, f.conv);
      row.a[x] = v;
      row.a[n + x] = -v;
    }
    row.rel = Rel::EQ;
    row.b = Rational(0);
    lp.rows.push_back(std::move(row));
  }
  lp.row_labels.push_back("norm");
  for (uint32_t mono : out.monos) lp.row_labels.push_back("mono:" + std::to_string(mono));
  for (Point x = 0; x < n; x++) lp.col_labels.push_back("psi+:" + std::to_string(x));
  for (Point x = 0; x < n; x++) lp.col_labels.push_back("psi-:" + std::to_string(x));
  auto sol = solve_lp(lp, mode);
  if (sol.status != LPStatus::Optimal) throw Error("approx dual LP not optimal");
  out.value = sol.objective;
  out.row_dual = sol.row_dual;
  out.psi = CubeFn(f.arity);
  for (Point x = 0; x < n; x++) out.psi.at(x) = sol.x[x] - sol.x[n + x];
  // A vertex may spend norm on overlapping +- parts; cancel and rescale so
  // the witness meets the unit-norm condition exactly.
  Rational l1 = out.psi.l1_norm();
  if (sgn(sol.objective) > 0 && sgn(l1) > 0 && l1 != 1)
    for (auto& v : out.psi.values) v /= l1;
  return out;
}

DualSolve solve_onesided_dual(const PartialBoolFn& f, int d, SolverMode mode) {
  if (f.conv != Convention::ZeroOne)
    throw InvalidParams("one-sided degree expects the 0/1 convention");
  DualSolve out;
  out.monos = monomials_upto(f.arity, d);
  const size_t n = f.cube_size();
  std::vector<Point> ones, zeros;
  for (Point x = 0; x < n; x++) {
    if (f.at(x) == Val::One) ones.push_back(x);
    if (f.at(x) == Val::Zero) zeros.push_back(x);
  }
  const int k1 = (int)ones.size(), k0 = (int)zeros.size();
  LPInstance lp;
  lp.num_vars = 2 * k1 + k0;
  lp.maximize = true;
  lp.objective.assign(lp.num_vars, Rational(0));
  lp.nonneg.assign(lp.num_vars, true);
  for (int j = 0; j < k1; j++) {
    lp.objective[j] = Rational(1);
    lp.objective[k1 + j] = Rational(-1);
  }
  {
    LPRow norm;
    norm.a.assign(lp.num_vars, Rational(1));
    norm.rel = Rel::EQ;
    norm.b = Rational(1);
    lp.rows.push_back(std::move(norm));
  }
  for (uint32_t mono : out.monos) {
    LPRow row;
    row.a.assign(lp.num_vars, Rational(0));
    for (int j = 0; j < k1; j++) {
      Rational v = chi(mono, ones[j], f.conv);
      row.a[j] = v;
      row.a[k1 + j] = -v;
    }
    for (int j = 0; j < k0; j++) row.a[2 * k1 + j] = -chi(mono, zeros[j], f.conv);
    row.rel = Rel::EQ;
    row.b = Rational(0);
    lp.rows.push_back(std::move(row));
  }
  lp.row_labels.push_back("norm");
  for (uint32_t mono : out.monos) lp.row_labels.push_back("mono:" + std::to_string(mono));
  for (Point x : ones) lp.col_labels.push_back("psi+:" + std::to_string(x));
  for (Point x : ones) lp.col_labels.push_back("psi-:" + std::to_string(x));
  for (Point x : zeros) lp.col_labels.push_back("z:" + std::to_string(x));
  auto sol = solve_lp(lp, mode);
  if (sol.status != LPStatus::Optimal) throw Error("one-sided dual LP not optimal");
  out.value = sol.objective;
  out.row_dual = sol.row_dual;
  out.psi = CubeFn(f.arity);
  for (int j = 0; j < k1; j++) out.psi.at(ones[j]) = sol.x[j] - sol.x[k1 + j];
  for (int j = 0; j < k0; j++) out.psi.at(zeros[j]) = -sol.x[2 * k1 + j];
  Rational l1 = out.psi.l1_norm();
  if (sgn(sol.objective) > 0 && sgn(l1) > 0 && l1 != 1)
    for (auto& v : out.psi.values) v /= l1;
  return out;
}

DualSolve solve_threshold_dual(const PartialBoolFn& f, int d, SolverMode mode) {
  DualSolve out;
  out.monos = monomials_upto(f.arity, d);
  std::vector<Point> dom;
  for (Point x = 0; x < f.cube_size(); x++)
    if (f.in_domain(x)) dom.push_back(x);
  const int kd = (int)dom.size();
  if (kd == 0) throw EmptyDomain("threshold dual on empty domain");

  LPInstance lp;
  lp.num_vars = kd + 1;  // y over the domain, then lambda
  lp.maximize = false;
  lp.objective.assign(lp.num_vars, Rational(0));
  lp.objective[kd] = Rational(1);
  lp.nonneg.assign(lp.num_vars, true);
  lp.nonneg[kd] = false;
  {
    LPRow norm;
    norm.a.assign(lp.num_vars, Rational(1));
    norm.a[kd] = Rational(0);
    norm.rel = Rel::EQ;
    norm.b = Rational(1);
    lp.rows.push_back(std::move(norm));
  }
  for (uint32_t mono : out.monos) {
    for (int s : {+1, -1}) {
      LPRow row;  // s * <sigma y, chi> - lambda <= 0
      row.a.assign(lp.num_vars, Rational(0));
      for (int j = 0; j < kd; j++)
        row.a[j] = Rational(s * sign_of(f, dom[j])) * chi(mono, dom[j], f.conv);
      row.a[kd] = Rational(-1);
      row.rel = Rel::LE;
      row.b = Rational(0);
      lp.rows.push_back(std::move(row));
    }
  }
  lp.row_labels.push_back("norm");
  for (uint32_t mono : out.monos) {
    lp.row_labels.push_back("mono+:" + std::to_string(mono));
    lp.row_labels.push_back("mono-:" + std::to_string(mono));
  }
  for (Point x : dom) lp.col_labels.push_back("y:" + std::to_string(x));
  lp.col_labels.push_back("lambda");
  auto sol = solve_lp(lp, mode);
  if (sol.status != LPStatus::Optimal) throw Error("threshold dual LP not optimal");
  out.value = sol.objective;
  out.row_dual = sol.row_dual;
  out.psi = CubeFn(f.arity);
  for (int j = 0; j < kd; j++)
    out.psi.at(dom[j]) = Rational(sign_of(f, dom[j])) * sol.x[j];
  return out;
}

}  // namespace

Rational approx_dual_level(const PartialBoolFn& f, int d, SolverMode mode,
                           CubeFn* witness) {
  auto out = solve_approx_dual(f, d, mode);
  if (witness) *witness = std::move(out.psi);
  return out.value;
}

Rational onesided_dual_level(const PartialBoolFn& f, int d, SolverMode mode,
                             CubeFn* witness) {
  auto out = solve_onesided_dual(f, d, mode);
  if (witness) *witness = std::move(out.psi);
  return out.value;
}

Rational threshold_dual_lambda(const PartialBoolFn& f, int d, SolverMode mode,
                               CubeFn* witness) {
  auto out = solve_threshold_dual(f, d, mode);
  if (witness) *witness = std::move(out.psi);
  return out.value;
}

namespace {

// Primal witness from the dual LP's row multipliers (coefficients live on
// the monomial rows); exactness is re-checked and a direct primal solve is
// the fallback.
MultilinearPoly primal_from_multipliers(const PartialBoolFn& f, const DualSolve& ds,
                                        Measure measure, int d, SolverMode mode,
                                        Rational* primal_value) {
  MultilinearPoly p;
  p.arity = f.arity;
  p.conv = f.conv;
  for (size_t j = 0; j < ds.monos.size(); j++) p.set(ds.monos[j], ds.row_dual[1 + j]);
  bool ok = measure == Measure::Approx ? approx_witness_ok(f, p, ds.value)
                                       : onesided_witness_ok(f, p, ds.value);
  if (ok) {
    *primal_value = ds.value;
    return p;
  }
  // Fall back to the direct primal solve; its optimum must match exactly.
  MultilinearPoly direct;
  direct.arity = f.arity;
  direct.conv = f.conv;
  auto primal_level = measure == Measure::Approx ? approx_primal_level
                                                 : onesided_primal_level;
  LevelValue lv = primal_level(f, d, mode, &direct);
  if (lv.unbounded || lv.value != ds.value)
    throw Error("internal: strong duality violated in degree search");
  *primal_value = lv.value;
  return direct;
}

}  // namespace

DegreeResult approx_degree(const PartialBoolFn& f, const Rational& eps,
                           SolverMode mode) {
  check_eps_range(f, eps);
  DegreeResult res;
  res.measure = Measure::Approx;
  res.eps = eps;
  res.mode = mode;
  CubeFn prev_dual;
  Rational prev_value;
  for (int d = 0; d <= f.arity; d++) {
    auto ds = solve_approx_dual(f, d, mode);
    if (ds.value <= eps) {
      res.degree = d;
      res.primal = primal_from_multipliers(f, ds, Measure::Approx, d, mode,
                                           &res.primal_value);
      if (d >= 1) {
        auto rep = verify_dual(prev_dual, f, WitnessKind::ApproxDual, d - 1, eps);
        if (!rep.verdict) throw Error("internal: extracted dual fails verification");
        res.dual = std::move(prev_dual);
        res.dual_value = prev_value;
      }
      return res;
    }
    prev_dual = std::move(ds.psi);
    prev_value = ds.value;
  }
  throw Error("degree search exhausted the trivial bound");
}

DegreeResult onesided_degree(const PartialBoolFn& f, const Rational& eps,
                             SolverMode mode) {
  check_eps_range(f, eps);
  if (f.conv != Convention::ZeroOne)
    throw InvalidParams("one-sided degree expects the 0/1 convention");
  DegreeResult res;
  res.measure = Measure::OneSided;
  res.eps = eps;
  res.mode = mode;

  bool any_one = false;
  for (Point x = 0; x < f.cube_size(); x++) any_one |= (f.at(x) == Val::One);
  if (!any_one) {
    // Only upper bounds remain; the zero polynomial already meets them.
    res.degree = 0;
    MultilinearPoly p;
    p.arity = f.arity;
    p.conv = f.conv;
    res.primal = std::move(p);
    res.primal_value = Rational(0);
    return res;
  }

  CubeFn prev_dual;
  Rational prev_value;
  for (int d = 0; d <= f.arity; d++) {
    auto ds = solve_onesided_dual(f, d, mode);
    if (ds.value <= eps) {
      res.degree = d;
      res.primal = primal_from_multipliers(f, ds, Measure::OneSided, d, mode,
                                           &res.primal_value);
      if (d >= 1) {
        auto rep = verify_dual(prev_dual, f, WitnessKind::OneSidedDual, d - 1, eps);
        if (!rep.verdict) throw Error("internal: extracted dual fails verification");
        res.dual = std::move(prev_dual);
        res.dual_value = prev_value;
      }
      return res;
    }
    prev_dual = std::move(ds.psi);
    prev_value = ds.value;
  }
  throw Error("degree search exhausted the trivial bound");
}

DegreeResult threshold_degree(const PartialBoolFn& f, SolverMode mode) {
  if (f.domain_size() == 0) throw EmptyDomain("threshold degree of empty function");
  DegreeResult res;
  res.measure = Measure::Threshold;
  res.mode = mode;
  CubeFn prev_dual;
  for (int d = 0; d <= f.arity; d++) {
    auto ds = solve_threshold_dual(f, d, mode);
    if (sgn(ds.value) > 0) {
      res.degree = d;
      // Reconstruct the margin witness from the paired multipliers of the
      // +-monomial rows, then rescale to the margin-1 encoding.
      MultilinearPoly p;
      p.arity = f.arity;
      p.conv = f.conv;
      for (size_t j = 0; j < ds.monos.size(); j++) {
        Rational c = ds.row_dual[1 + 2 * j] - ds.row_dual[1 + 2 * j + 1];
        p.set(ds.monos[j], -c);
      }
      if (!threshold_witness_ok(f, p, ds.value)) {
        MultilinearPoly direct;
        Rational margin = threshold_primal_margin(f, d, mode, &direct);
        if (margin != ds.value)
          throw Error("internal: strong duality violated in threshold search");
        p = std::move(direct);
      }
      res.primal_value = ds.value;
      for (auto& [mono, c] : p.coeffs) c /= ds.value;
      res.primal = std::move(p);
      if (d >= 1) {
        res.dual_value = Rational(0);
        auto rep = verify_dual(prev_dual, f, WitnessKind::ThresholdDual, d - 1,
                               std::nullopt);
        if (!rep.verdict) throw Error("internal: extracted dual fails verification");
        res.dual = std::move(prev_dual);
      }
      return res;
    }
    prev_dual = std::move(ds.psi);
  }
  throw Error("threshold search exhausted the trivial bound");
}

std::pair<MuParts, MuDecompositionReport> decompose_dual(const CubeFn& mu,
                                                 const PartialBoolFn& f, int d,
                                                 const Rational& eps,
                                                 bool onesided) {
  if (f.conv != Convention::ZeroOne)
    throw InvalidParams("decompose_dual expects the 0/1 convention");
  auto rep0 = verify_dual(mu, f,
                          onesided ? WitnessKind::OneSidedDual : WitnessKind::ApproxDual,
                          d, eps);
  if (!rep0.verdict) throw NotADualWitness("mu fails its dual conditions");

  MuParts parts;
  for (CubeFn* c : {&parts.plus, &parts.minus, &parts.plus0, &parts.plus1,
                    &parts.minus0, &parts.minus1})
    *c = CubeFn(mu.arity);
  for (Point x = 0; x < mu.cube_size(); x++) {
    const Rational& v = mu.at(x);
    int s = sgn(v);
    if (s > 0) {
      parts.plus.at(x) = v;
      if (f.at(x) == Val::One) parts.plus1.at(x) = v;
      if (f.at(x) == Val::Zero) parts.plus0.at(x) = v;
    } else if (s < 0) {
      parts.minus.at(x) = -v;
      if (f.at(x) == Val::One) parts.minus1.at(x) = -v;
      if (f.at(x) == Val::Zero) parts.minus0.at(x) = -v;
    }
  }

  MuDecompositionReport rep;
  rep.disjoint_supports = true;
  for (Point x = 0; x < mu.cube_size(); x++)
    if (sgn(parts.plus.at(x)) != 0 && sgn(parts.minus.at(x)) != 0)
      rep.disjoint_supports = false;
  rep.norm_plus = parts.plus.l1_norm();
  rep.norm_minus = parts.minus.l1_norm();
  rep.norms_half = rep.norm_plus == rat(1, 2) && rep.norm_minus == rat(1, 2);
  rep.norm_plus1 = parts.plus1.l1_norm();
  rep.norm_minus0 = parts.minus0.l1_norm();
  rep.plus1_above_eps = rep.norm_plus1 > eps;
  rep.minus0_above_eps = rep.norm_minus0 > eps;
  rep.all_pass = rep.disjoint_supports && rep.norms_half && rep.plus1_above_eps &&
                 rep.minus0_above_eps;
  if (onesided) {
    rep.onesided_plus1_is_half = (rep.norm_plus1 == rat(1, 2));
    rep.all_pass = rep.all_pass && *rep.onesided_plus1_is_half;
  }
  return {std::move(parts), std::move(rep)};
}

QueryBounds query_bounds(const PartialBoolFn& f, SolverMode mode) {
  QueryBounds qb;
  qb.upp_dt = threshold_degree(f, mode).degree;
  qb.pp_dt_lower = Rational(0);
  for (int d = f.arity; d >= 1; d--) {
    Rational eps = rat(1, 2) - pow2_neg((unsigned long)d);
    if (approx_degree(f, eps, mode).degree > d) {
      qb.pp_dt_lower = Rational(d) / 2;
      break;
    }
  }
  return qb;
}

}  // namespace dualdeg
