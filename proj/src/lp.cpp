#include "dualdeg/lp.hpp"
#include <cstdlib>
#include <cstdio>

#include <algorithm>
#include <cmath>
#include <type_traits>

namespace dualdeg {

void LPInstance::check() const {
  if ((int)objective.size() != num_vars) throw MalformedLP("objective size mismatch");
  if ((int)nonneg.size() != num_vars) throw MalformedLP("bounds size mismatch");
  for (const auto& r : rows)
    if ((int)r.a.size() != num_vars) throw MalformedLP("row size mismatch");
}

namespace {

template <class Num>
struct Scalar {
  static bool is_zero(const Num& v);
  static bool is_neg(const Num& v);
  static Num from_rat(const Rational& r);
};

template <>
struct Scalar<Rational> {
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static bool is_neg(const Rational& v) { return sgn(v) < 0; }
  static Rational from_rat(const Rational& r) { return r; }
};

template <>
struct Scalar<double> {
  static constexpr double kTol = 1e-9;
  static bool is_zero(double v) { return std::fabs(v) < kTol; }
  static bool is_neg(double v) { return v < -kTol; }
  static double from_rat(const Rational& r) { return r.get_d(); }
};

// Standardized problem: min c.z, A z = b, z >= 0, b >= 0, with an initial
// basic column per row (slack where possible, artificial otherwise).
struct Standardized {
  int m = 0, n = 0;            // rows, total columns
  int n_real = 0;              // structural + slack columns (non-artificial)
  std::vector<int> col_of_var;   // var -> first standardized column
  std::vector<bool> var_split;   // free vars occupy col, col+1 (plus, minus)
  std::vector<int> art_col;      // per row: artificial column or -1
  std::vector<int> row_sigma;    // +-1 applied to original row
  std::vector<std::vector<Rational>> A;  // m x n
  std::vector<Rational> b;
  std::vector<Rational> cost;            // phase-2 cost over n columns
  std::vector<int> init_basis;           // per row
};

Standardized standardize(const LPInstance& inst) {
  inst.check();
  Standardized S;
  S.m = (int)inst.rows.size();
  S.col_of_var.resize(inst.num_vars);
  S.var_split.resize(inst.num_vars);
  int n = 0;
  for (int j = 0; j < inst.num_vars; j++) {
    S.col_of_var[j] = n;
    S.var_split[j] = !inst.nonneg[j];
    n += inst.nonneg[j] ? 1 : 2;
  }
  const int slack_base = n;
  std::vector<int> slack_col(S.m, -1);
  for (int i = 0; i < S.m; i++)
    if (inst.rows[i].rel != Rel::EQ) slack_col[i] = n++;
  S.n_real = n;
  S.art_col.assign(S.m, -1);
  S.row_sigma.assign(S.m, 1);

  // Decide sign flips and artificial columns.
  for (int i = 0; i < S.m; i++) {
    const auto& r = inst.rows[i];
    int sigma = sgn(r.b) < 0 ? -1 : 1;
    S.row_sigma[i] = sigma;
    // slack coefficient after flip: LE -> sigma, GE -> -sigma
    int scoef = (r.rel == Rel::LE) ? sigma : (r.rel == Rel::GE ? -sigma : 0);
    if (scoef != 1) S.art_col[i] = n++;
  }
  S.n = n;
  (void)slack_base;

  S.A.assign(S.m, std::vector<Rational>(S.n, Rational(0)));
  S.b.assign(S.m, Rational(0));
  S.cost.assign(S.n, Rational(0));
  S.init_basis.assign(S.m, -1);

  for (int j = 0; j < inst.num_vars; j++) {
    Rational c = inst.maximize ? Rational(-inst.objective[j]) : inst.objective[j];
    S.cost[S.col_of_var[j]] = c;
    if (S.var_split[j]) S.cost[S.col_of_var[j] + 1] = -c;
  }
  for (int i = 0; i < S.m; i++) {
    const auto& r = inst.rows[i];
    int sigma = S.row_sigma[i];
    for (int j = 0; j < inst.num_vars; j++) {
      if (sgn(r.a[j]) == 0) continue;
      Rational v = sigma > 0 ? r.a[j] : Rational(-r.a[j]);
      S.A[i][S.col_of_var[j]] = v;
      if (S.var_split[j]) S.A[i][S.col_of_var[j] + 1] = -v;
    }
    S.b[i] = sigma > 0 ? r.b : Rational(-r.b);
    if (slack_col[i] >= 0)
      S.A[i][slack_col[i]] = Rational((r.rel == Rel::LE) ? sigma : -sigma);
    if (S.art_col[i] >= 0) {
      S.A[i][S.art_col[i]] = Rational(1);
      S.init_basis[i] = S.art_col[i];
    } else {
      S.init_basis[i] = slack_col[i];
    }
  }
  return S;
}

template <class Num>
struct Tableau {
  int m = 0, n = 0, n_real = 0;
  std::vector<std::vector<Num>> T;  // m rows x (n+1), last col = rhs
  std::vector<Num> cost;            // reduced cost row, [n] = -objective
  std::vector<int> basis;
  long pivots = 0;
  long pivot_cap = 50'000'000;
  std::vector<int> nz_scratch;

  void rebuild_lex_order() {
    std::vector<bool> in_basis(n, false);
    for (int c : basis) in_basis[c] = true;
    lex_order = basis;
    for (int j = 0; j < n; j++)
      if (!in_basis[j]) lex_order.push_back(j);
  }

  // row_i -= f * row_pr over the nonzero columns of the pivot row, with a
  // reused scratch cell so the hot loop does no allocation.
  void eliminate(std::vector<Num>& row, const Num& f,
                 const std::vector<Num>& prow, const std::vector<int>& nz) {
    if constexpr (std::is_same_v<Num, Rational>) {
      static thread_local mpq_class scratch;
      for (int j : nz) {
        mpq_mul(scratch.get_mpq_t(), f.get_mpq_t(), prow[j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), scratch.get_mpq_t());
      }
    } else {
      for (int j : nz) row[j] -= f * prow[j];
    }
  }

  void pivot(int pr, int pc) {
    auto& prow = T[pr];
    Num piv = prow[pc];
    auto& nz = nz_scratch;
    nz.clear();
    for (int j = 0; j <= n; j++) {
      if (Scalar<Num>::is_zero(prow[j])) continue;
      prow[j] = prow[j] / piv;
      nz.push_back(j);
    }
    for (int i = 0; i < m; i++) {
      if (i == pr || Scalar<Num>::is_zero(T[i][pc])) continue;
      Num f = T[i][pc];
      eliminate(T[i], f, prow, nz);
      T[i][pc] = Num(0);
    }
    if (!Scalar<Num>::is_zero(cost[pc])) {
      Num f = cost[pc];
      eliminate(cost, f, prow, nz);
      cost[pc] = Num(0);
    }
    basis[pr] = pc;
    pivots++;
  }

  // Rebuild the reduced-cost row for a given column cost vector.
  void set_cost(const std::vector<Num>& c, int limit_cols) {
    cost.assign(n + 1, Num(0));
    for (int j = 0; j < limit_cols; j++) cost[j] = c[j];
    for (int i = 0; i < m; i++) {
      Num cb = (basis[i] < limit_cols) ? c[basis[i]] : Num(0);
      if (Scalar<Num>::is_zero(cb)) continue;
      for (int j = 0; j <= n; j++) cost[j] -= cb * T[i][j];
    }
  }

  // Column scan order for the lexicographic ratio test: rhs first, then the
  // initial basic columns (an identity), then the rest. Rows stay
  // lexicographically positive under this order, which rules out cycling
  // for any entering rule.
  std::vector<int> lex_order;

  // T[i][c]/T[i][enter] < T[j][c]/T[j][enter], by cross-multiplication
  // (both pivot-column entries are positive here).
  bool ratio_less(int i, int j, int c, int enter) const {
    return T[i][c] * T[j][enter] < T[j][c] * T[i][enter];
  }

  // One simplex phase over allowed columns: Dantzig pricing plus the
  // lexicographic leaving rule. Returns false on unboundedness.
  bool run(int allowed_cols) {
    std::vector<int> cand, next;
    for (;;) {
      int enter = -1;
      const Num* best = nullptr;
      for (int j = 0; j < allowed_cols; j++)
        if (Scalar<Num>::is_neg(cost[j]) && (!best || cost[j] < *best)) {
          best = &cost[j];
          enter = j;
        }
      if (enter < 0) return true;

      cand.clear();
      for (int i = 0; i < m; i++) {
        if (Scalar<Num>::is_zero(T[i][enter]) || Scalar<Num>::is_neg(T[i][enter]))
          continue;
        if (cand.empty()) {
          cand.push_back(i);
          continue;
        }
        if (ratio_less(i, cand[0], n, enter)) {
          cand.clear();
          cand.push_back(i);
        } else if (!ratio_less(cand[0], i, n, enter)) {
          cand.push_back(i);
        }
      }
      if (cand.empty()) return false;
      for (size_t oi = 0; cand.size() > 1 && oi < lex_order.size(); oi++) {
        int c = lex_order[oi];
        next.clear();
        for (int i : cand) {
          if (next.empty()) {
            next.push_back(i);
            continue;
          }
          if (ratio_less(i, next[0], c, enter)) {
            next.clear();
            next.push_back(i);
          } else if (!ratio_less(next[0], i, c, enter)) {
            next.push_back(i);
          }
        }
        cand = next;
      }
      pivot(cand[0], enter);
      if (pivots > pivot_cap) throw TooLarge("simplex pivot cap exceeded");
      if (trace && pivots % 500 == 0)
        fprintf(stderr, "[lp] pivots=%ld enter=%d leave=%d\n", pivots, enter,
                cand[0]);
    }
  }
  static inline bool trace = getenv("DUALDEG_LP_TRACE") != nullptr;
};

template <class Num>
Tableau<Num> build_tableau(const Standardized& S) {
  Tableau<Num> t;
  t.m = S.m;
  t.n = S.n;
  t.n_real = S.n_real;
  t.basis = S.init_basis;
  t.T.assign(S.m, std::vector<Num>(S.n + 1, Num(0)));
  for (int i = 0; i < S.m; i++) {
    for (int j = 0; j < S.n; j++) t.T[i][j] = Scalar<Num>::from_rat(S.A[i][j]);
    t.T[i][S.n] = Scalar<Num>::from_rat(S.b[i]);
  }
  std::vector<bool> in_basis(S.n, false);
  for (int c : S.init_basis) in_basis[c] = true;
  t.lex_order = S.init_basis;
  for (int j = 0; j < S.n; j++)
    if (!in_basis[j]) t.lex_order.push_back(j);
  return t;
}

template <class Num>
std::vector<Num> full_cost(const Standardized& S) {
  std::vector<Num> c(S.n, Num(0));
  for (int j = 0; j < S.n; j++) c[j] = Scalar<Num>::from_rat(S.cost[j]);
  return c;
}

// After phase 1, pivot out any artificial still basic (or detect redundancy).
template <class Num>
void evict_artificials(Tableau<Num>& t) {
  for (int i = 0; i < t.m; i++) {
    if (t.basis[i] < t.n_real) continue;
    int pc = -1;
    for (int j = 0; j < t.n_real; j++)
      if (!Scalar<Num>::is_zero(t.T[i][j])) {
        pc = j;
        break;
      }
    if (pc >= 0) t.pivot(i, pc);
    // else: redundant row; the artificial stays basic at value zero and its
    // column is never eligible to re-enter.
  }
}

template <class Num>
struct PhasedResult {
  LPStatus status;
  Tableau<Num> tab;
  std::vector<Num> phase1_cost_row;  // final phase-1 reduced costs (if infeasible)
};

template <class Num>
PhasedResult<Num> run_two_phase(const Standardized& S,
                                const std::vector<int>* warm_basis) {
  Tableau<Num> t = build_tableau<Num>(S);
  if constexpr (std::is_same_v<Num, double>) t.pivot_cap = 300'000;

  bool need_phase1 = true;
  if (warm_basis) {
    // Try to realize the suggested basis by direct pivoting.
    Tableau<Num> w = t;
    bool ok = true;
    std::vector<bool> row_used(w.m, false);
    w.cost.assign(w.n + 1, Num(0));
    for (int col : *warm_basis) {
      if (col < 0 || col >= w.n) {
        ok = false;
        break;
      }
      int pr = -1;
      for (int i = 0; i < w.m; i++)
        if (!row_used[i] && !Scalar<Num>::is_zero(w.T[i][col])) {
          pr = i;
          break;
        }
      if (pr < 0) {
        ok = false;
        break;
      }
      w.pivot(pr, col);
      row_used[pr] = true;
    }
    if (ok)
      for (int i = 0; i < w.m; i++)
        if (Scalar<Num>::is_neg(w.T[i][w.n])) ok = false;
    if (ok) {
      t = std::move(w);
      t.rebuild_lex_order();  // keeps rows lexicographically positive
      need_phase1 = false;
    }
  }

  if (need_phase1) {
    bool any_artificial = false;
    for (int i = 0; i < t.m; i++) any_artificial |= (t.basis[i] >= t.n_real);
    if (any_artificial) {
      std::vector<Num> c1(t.n, Num(0));
      for (int j = t.n_real; j < t.n; j++) c1[j] = Num(1);
      t.set_cost(c1, t.n);
      if (!t.run(t.n)) throw Error("phase 1 unbounded");
      // cost[n] = -objective; infeasible iff optimum > 0
      if (Scalar<Num>::is_neg(t.cost[t.n])) {
        PhasedResult<Num> r{LPStatus::Infeasible, std::move(t), {}};
        r.phase1_cost_row = r.tab.cost;
        return r;
      }
      evict_artificials(t);
    }
  }

  // Phase transitions pivot outside the lex rule; re-anchoring the scan
  // order on the current basis keeps every row lexicographically positive.
  t.rebuild_lex_order();
  t.set_cost(full_cost<Num>(S), t.n_real);
  if (!t.run(t.n_real))
    return {LPStatus::Unbounded, std::move(t), {}};
  return {LPStatus::Optimal, std::move(t), {}};
}

std::vector<Rational> recover_x(const LPInstance& inst, const Standardized& S,
                                const Tableau<Rational>& t) {
  std::vector<Rational> z(S.n, Rational(0));
  for (int i = 0; i < t.m; i++) z[t.basis[i]] = t.T[i][t.n];
  std::vector<Rational> x(inst.num_vars);
  for (int j = 0; j < inst.num_vars; j++) {
    x[j] = z[S.col_of_var[j]];
    if (S.var_split[j]) x[j] -= z[S.col_of_var[j] + 1];
  }
  return x;
}

// Multipliers from the final phase-2 reduced costs: the initial basic
// column of each row (unit slack or artificial, both cost zero in phase 2)
// has reduced cost -y_i.
std::vector<Rational> recover_duals(const LPInstance& inst, const Standardized& S,
                                    const Tableau<Rational>& t) {
  std::vector<Rational> y(S.m);
  for (int i = 0; i < S.m; i++) {
    Rational yi = -t.cost[S.init_basis[i]];
    if (S.row_sigma[i] < 0) yi = -yi;
    y[i] = inst.maximize ? Rational(-yi) : yi;
  }
  return y;
}

FarkasCertificate recover_farkas(const Standardized& S,
                                 const Tableau<Rational>& t) {
  // Phase-1 dual values: artificial column j of row i has reduced cost
  // 1 - y_i. Rows without an artificial kept their unit slack column, whose
  // reduced cost is -y_i * (that slack sign) ... we avoid the case split by
  // only reading artificial columns and slack-basis columns directly.
  std::vector<Rational> y(S.m, Rational(0));
  for (int i = 0; i < S.m; i++) {
    if (S.art_col[i] >= 0) {
      y[i] = Rational(1) - t.cost[S.art_col[i]];
    } else {
      // initial basis column was a +1 slack; its reduced cost is -y_i
      y[i] = -t.cost[S.init_basis[i]];
    }
  }
  FarkasCertificate f;
  f.y.resize(S.m);
  for (int i = 0; i < S.m; i++)
    f.y[i] = S.row_sigma[i] > 0 ? Rational(-y[i]) : y[i];
  return f;
}

}  // namespace

bool lp_point_feasible(const LPInstance& inst, const std::vector<Rational>& x) {
  if ((int)x.size() != inst.num_vars) return false;
  for (int j = 0; j < inst.num_vars; j++)
    if (inst.nonneg[j] && sgn(x[j]) < 0) return false;
  for (const auto& r : inst.rows) {
    Rational lhs(0);
    for (int j = 0; j < inst.num_vars; j++) lhs += r.a[j] * x[j];
    if (r.rel == Rel::LE && lhs > r.b) return false;
    if (r.rel == Rel::GE && lhs < r.b) return false;
    if (r.rel == Rel::EQ && lhs != r.b) return false;
  }
  return true;
}

bool lp_farkas_valid(const LPInstance& inst, const FarkasCertificate& f) {
  if (f.y.size() != inst.rows.size()) return false;
  for (size_t i = 0; i < inst.rows.size(); i++) {
    if (inst.rows[i].rel == Rel::LE && sgn(f.y[i]) < 0) return false;
    if (inst.rows[i].rel == Rel::GE && sgn(f.y[i]) > 0) return false;
  }
  Rational yb(0);
  for (size_t i = 0; i < inst.rows.size(); i++) yb += f.y[i] * inst.rows[i].b;
  if (!(yb < 0)) return false;
  for (int j = 0; j < inst.num_vars; j++) {
    Rational col(0);
    for (size_t i = 0; i < inst.rows.size(); i++) col += f.y[i] * inst.rows[i].a[j];
    if (inst.nonneg[j] ? sgn(col) < 0 : sgn(col) != 0) return false;
  }
  return true;
}

bool lp_duals_valid(const LPInstance& inst, const LPSolution& sol) {
  if (sol.row_dual.size() != inst.rows.size()) return false;
  Rational yb(0);
  for (size_t i = 0; i < inst.rows.size(); i++) yb += sol.row_dual[i] * inst.rows[i].b;
  if (yb != sol.objective) return false;
  for (int j = 0; j < inst.num_vars; j++) {
    Rational s(0);
    for (size_t i = 0; i < inst.rows.size(); i++)
      s += sol.row_dual[i] * inst.rows[i].a[j];
    if (!inst.nonneg[j]) {
      if (s != inst.objective[j]) return false;
    } else if (inst.maximize ? s < inst.objective[j] : s > inst.objective[j]) {
      return false;
    }
  }
  return true;
}

LPSolution solve_lp(const LPInstance& inst, SolverMode mode) {
  Standardized S = standardize(inst);

  std::vector<int> warm;
  bool presolved = false;
  if (mode == SolverMode::FloatPresolveExactVerify) {
    try {
      auto fr = run_two_phase<double>(S, nullptr);
      if (fr.status == LPStatus::Optimal) {
        warm = fr.tab.basis;
        presolved = true;
      }
    } catch (const TooLarge&) {
      // presolve stalled; fall through to the exact two-phase path
    }
  }

  auto r = run_two_phase<Rational>(S, presolved ? &warm : nullptr);
  LPSolution sol;
  sol.pivots = r.tab.pivots;
  sol.presolve_used = presolved;
  sol.status = r.status;
  if (r.status == LPStatus::Infeasible) {
    r.tab.cost = r.phase1_cost_row;
    sol.farkas = recover_farkas(S, r.tab);
    if (!lp_farkas_valid(inst, *sol.farkas))
      throw Error("internal: invalid Farkas certificate");
    return sol;
  }
  if (r.status == LPStatus::Unbounded) return sol;

  sol.x = recover_x(inst, S, r.tab);
  if (!lp_point_feasible(inst, sol.x))
    throw Error("internal: simplex returned infeasible point");
  Rational obj(0);
  for (int j = 0; j < inst.num_vars; j++) obj += inst.objective[j] * sol.x[j];
  sol.objective = obj;
  sol.row_dual = recover_duals(inst, S, r.tab);
  if (!lp_duals_valid(inst, sol)) throw Error("internal: invalid row multipliers");
  return sol;
}

}  // namespace dualdeg
