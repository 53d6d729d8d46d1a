#include "dualdeg/suite.hpp"

#include <bit>
#include <chrono>
#include <random>

#include <omp.h>

#include "dualdeg/amplify.hpp"
#include "dualdeg/degree.hpp"
#include "dualdeg/dist.hpp"
#include "dualdeg/io.hpp"
#include "dualdeg/verify.hpp"

namespace dualdeg {

namespace {

using Clock = std::chrono::steady_clock;

struct StoredDual {
  CubeFn psi;
  PartialBoolFn f;
  WitnessKind kind;
  int d;
  Rational eps;
};

struct Ctx {
  std::mt19937_64 rng;
  bool quick = false;
  SolverMode fast = SolverMode::FloatPresolveExactVerify;
  std::vector<StoredDual> duals;  // collected by criteria 1-2
};

Rational rand_rat(std::mt19937_64& g, long lo, long hi, long max_den) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, max_den);
  return rat(num(g), den(g));
}

PartialBoolFn rand_partial(std::mt19937_64& g, int arity) {
  std::uniform_int_distribution<int> pick(0, 4);
  std::vector<uint8_t> table(size_t(1) << arity);
  for (auto& v : table) {
    int r = pick(g);
    v = uint8_t(r == 4 ? Val::Undef : (r % 2 ? Val::One : Val::Zero));
  }
  return PartialBoolFn::explicit_fn(arity, std::move(table));
}

void expect(bool cond, const std::string& what, std::string& log) {
  if (!cond) {
    if (!log.empty()) log += "; ";
    log += what;
  }
}

CriterionResult finish(int id, const std::string& name, double budget,
                       Clock::time_point t0, std::string fail_log,
                       std::string detail) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.budget = budget;
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.pass = fail_log.empty();
  r.details = r.pass ? detail : fail_log;
  return r;
}

// --- criterion 1: threshold strong duality over every 3-bit total function

CriterionResult c1_degree_oracle(Ctx& ctx) {
  auto t0 = Clock::now();
  std::string fail;
  long checked = 0;
  for (uint32_t pat = 0; pat < 256; pat++) {
    std::vector<uint8_t> table(8);
    for (int x = 0; x < 8; x++) table[x] = uint8_t((pat >> x) & 1);
    auto f = PartialBoolFn::explicit_fn(3, std::move(table));
    auto r = threshold_degree(f);
    for (int dd = std::max(0, r.degree - 1); dd <= r.degree; dd++) {
      Rational margin = threshold_primal_margin(f, dd);
      Rational lambda = threshold_dual_lambda(f, dd);
      expect(margin == lambda,
             "strong duality broken at pattern " + std::to_string(pat), fail);
      checked++;
    }
    if (r.dual)
      ctx.duals.push_back({*r.dual, f, WitnessKind::ThresholdDual, r.degree - 1,
                           Rational(0)});
  }
  expect(threshold_degree(make_and(3)).degree == 1, "deg_pm(AND3) != 1", fail);
  expect(threshold_degree(make_xor(3)).degree == 3, "deg_pm(PARITY3) != 3", fail);
  auto pr = approx_degree(make_xor(3), rat(1, 3));
  expect(pr.degree == 3, "approx degree of PARITY3 at 1/3 != 3", fail);
  if (pr.dual)
    ctx.duals.push_back({*pr.dual, make_xor(3), WitnessKind::ApproxDual,
                         pr.degree - 1, rat(1, 3)});
  return finish(1, "degree-oracle-soundness", 60, t0, fail,
                "256 functions, " + std::to_string(checked) + " level pairs");
}

// --- criterion 2: convention conversion halves eps

CriterionResult c2_convention(Ctx& ctx) {
  auto t0 = Clock::now();
  std::string fail;
  std::uniform_int_distribution<int> ar(1, 3);
  const Rational epss[3] = {Rational(0), rat(1, 6), rat(1, 3)};
  long equal = 0, lesser = 0, direction_ok = 0, total = 0;
  for (int trial = 0; trial < 50; trial++) {
    auto f = rand_partial(ctx.rng, ar(ctx.rng));
    for (const Rational& eps : epss) {
      auto r01 = approx_degree(f, eps);
      auto rpm = approx_degree(convert_convention(f), 2 * eps);
      total++;
      if (r01.degree == rpm.degree) equal++;
      if (r01.degree < rpm.degree) lesser++;
      if (r01.degree <= rpm.degree) direction_ok++;
      if (r01.dual)
        ctx.duals.push_back({*r01.dual, f, WitnessKind::ApproxDual,
                             r01.degree - 1, eps});
    }
  }
  // Totally defined functions convert exactly; assert that part in full.
  bool totals_ok = true;
  for (int m = 1; m <= 2 && totals_ok; m++)
    for (uint32_t pat = 0; pat < (uint32_t(1) << (1 << m)) && totals_ok; pat++) {
      std::vector<uint8_t> table(size_t(1) << m);
      for (size_t x = 0; x < table.size(); x++) table[x] = uint8_t((pat >> x) & 1);
      auto f = PartialBoolFn::explicit_fn(m, std::move(table));
      for (const Rational& eps : epss)
        totals_ok = totals_ok && approx_degree(f, eps).degree ==
                                     approx_degree(convert_convention(f), 2 * eps).degree;
    }
  expect(totals_ok, "conversion equality failed on a TOTAL function", fail);
  expect(direction_ok == total, "0/1 degree exceeded the +-1 degree somewhere", fail);
  // The criterion demands equality on random partial functions as well.
  // That can genuinely fail: with undefined points, the 0/1 convention
  // allows an approximator as low as -1-eps off the domain, while the +-1
  // image of such a polynomial exceeds the 1+2eps band, so the 0/1 side can
  // be strictly easier (observed below).
  expect(lesser == 0,
         std::to_string(lesser) + "/" + std::to_string(total) +
             " partial-function pairs had strictly smaller 0/1 degree"
             " (equality is provably not guaranteed off the domain)",
         fail);
  return finish(2, "convention-consistency", 120, t0, fail,
                "all totals equal; partial pairs: " + std::to_string(equal) + "/" +
                    std::to_string(total) + " equal, rest one-sided");
}

// --- criterion 3: decomposition conditions on every collected dual

CriterionResult c3_lemma_mus(Ctx& ctx) {
  auto t0 = Clock::now();
  std::string fail;
  long n_checked = 0;
  for (const auto& sd : ctx.duals) {
    // A threshold dual is an approximate-degree dual at eps = 0: unit norm,
    // nonnegative pure high degree, and correlation ||mu_+^1||_1 = 1/2 > 0.
    int d = sd.kind == WitnessKind::ThresholdDual ? 0 : sd.d;
    auto [parts, rep] = decompose_dual(sd.psi, sd.f, d, sd.eps, false);
    expect(rep.all_pass, "decomposition failed on a stored dual", fail);
    expect(rep.norm_plus == rat(1, 2) && rep.norm_minus == rat(1, 2),
           "mass split is not 1/2 + 1/2", fail);
    n_checked++;
  }
  return finish(3, "dual-decomposition", 0, t0, fail,
                std::to_string(n_checked) + " duals decomposed");
}

// --- criterion 4: psi_P pure high degree and the psi_k identity

CriterionResult c4_psi_p(Ctx& ctx) {
  auto t0 = Clock::now();
  std::string fail;
  const int M = 2;
  for (long n : {4L, 6L, 8L}) {
    // random nonnegative phi and A with both restrictions nonzero
    CubeFn phi(M);
    std::vector<uint8_t> in_a(4);
    Rational on(0), off(0);
    do {
      on = 0;
      off = 0;
      for (Point b = 0; b < 4; b++) {
        phi.at(b) = rand_rat(ctx.rng, 0, 3, 3);
        in_a[b] = ctx.rng() % 2;
        (in_a[b] ? on : off) += phi.at(b);
      }
    } while (sgn(on) == 0 || sgn(off) == 0);
    Rational alpha = off / on;

    for (int d = 0; d <= 2; d++) {
      UnivariatePoly P;
      for (int i = 0; i <= d; i++) P.c.push_back(rand_rat(ctx.rng, -2, 2, 2));
      if (sgn(P.c.back()) == 0) P.c.back() = Rational(1);
      CubeFn psiP = psi_p(phi, in_a, n, P, alpha);
      int phd = pure_high_degree(psiP);
      expect(phd >= n - d - 1,
             "phd(psi_P) < n-d-1 at n=" + std::to_string(n) + " d=" + std::to_string(d),
             fail);

      auto basis = pk_basis(n, alpha, d);
      auto beta = pk_expand(basis, P);
      // pointwise: psi_P = sum_k beta_k (-alpha)^{n_A} psi P_k(n_A)
      const Point mask = (Point(1) << M) - 1;
      bool identity_ok = true;
      for (Point x = 0; x < psiP.cube_size(); x++) {
        long cnt = 0;
        Rational prod(1);
        for (long i = 0; i < n; i++) {
          Point b = (x >> (i * M)) & mask;
          if (in_a[b]) cnt++;
          if (sgn(prod) != 0) prod *= phi.at(b);
        }
        Rational na = rat_pow(-alpha, (unsigned long)cnt);
        Rational sum(0);
        for (int k = 0; k <= d; k++)
          sum += beta[k] * na * prod * basis[k].eval(Rational(cnt));
        if (sum != psiP.at(x)) identity_ok = false;
      }
      expect(identity_ok, "psi_k closed-form identity broke", fail);
    }
  }
  // the direct sum-over-subsets definition, checked in full at n = 6
  {
    CubeFn phi(M);
    std::vector<uint8_t> in_a{0, 1, 1, 0};
    phi.at(0) = rat(1, 3);
    phi.at(1) = rat(1, 2);
    phi.at(2) = rat(1, 4);
    phi.at(3) = rat(1, 5);
    Rational alpha = (phi.at(0) + phi.at(3)) / (phi.at(1) + phi.at(2));
    const long n = 6;
    CubeFn phi_o(M), phi_x(M);
    for (Point b = 0; b < 4; b++) (in_a[b] ? phi_o : phi_x).at(b) = phi.at(b);
    auto basis = pk_basis(n, alpha, 2);
    for (int k = 0; k <= 2; k++) {
      CubeFn direct{int(n * M)};
      for (uint32_t s = 0; s < (uint32_t(1) << n); s++) {
        if (std::popcount(s) != k) continue;
        for (Point x = 0; x < direct.cube_size(); x++) {
          Rational prod(1);
          for (long i = 0; i < n && sgn(prod) != 0; i++) {
            Point b = (x >> (i * M)) & ((Point(1) << M) - 1);
            prod *= ((s >> i) & 1) ? phi.at(b) : phi_x.at(b) - alpha * phi_o.at(b);
          }
          direct.at(x) += prod;
        }
      }
      expect(pure_high_degree(direct) >= n - k - 1, "phd(psi_k) < n-k-1", fail);
      bool eq = true;
      for (Point x = 0; x < direct.cube_size(); x++) {
        long cnt = 0;
        Rational prod(1);
        for (long i = 0; i < n; i++) {
          Point b = (x >> (i * M)) & ((Point(1) << M) - 1);
          if (in_a[b]) cnt++;
          prod *= phi.at(b);
        }
        if (direct.at(x) !=
            rat_pow(-alpha, (unsigned long)cnt) * prod * basis[k].eval(Rational(cnt)))
          eq = false;
      }
      expect(eq, "direct psi_k disagrees with the closed form at k=" + std::to_string(k),
             fail);
    }
  }
  return finish(4, "psi-p-exactness", 120, t0, fail, "n in {4,6,8}, d in {0,1,2}");
}

// --- criterion 5: helper polynomial bounds over n <= 60

CriterionResult c5_helper(Ctx&) {
  auto t0 = Clock::now();
  std::string fail;
  // Regression constant: at eps = 3/5 the exact magnitude bound holds for
  // every n in [1, 60] at both a = 40 and a = 64 (smallest passing n is 1).
  for (long a : {40L, 64L}) {
    for (long n = 1; n <= 60; n++) {
      auto [p, rep] = helper_p(Rational(a), n, rat(3, 5));
      expect(rep.interpolation_ok,
             "interpolation broke at a=" + std::to_string(a) + " n=" + std::to_string(n),
             fail);
      expect(rep.bound_all_pass,
             "magnitude bound failed at a=" + std::to_string(a) +
                 " n=" + std::to_string(n),
             fail);
    }
  }
  return finish(5, "helper-polynomial", 300, t0, fail,
                "bound holds for all n <= 60 at a in {40,64}; smallest n = 1");
}

// --- criterion 6: end-to-end amplification for XOR2

CriterionResult c6_amplify(Ctx& ctx) {
  auto t0 = Clock::now();
  std::string fail;
  auto f = make_xor(2);
  auto two_sided = approx_degree(f, rat(49, 100));
  auto one_sided = onesided_degree(f, rat(49, 100));
  // For XOR2 the optimal dual is unique, so the two routes must construct
  // one and the same composed witness.
  expect(two_sided.dual->values == one_sided.dual->values,
         "two-sided and one-sided base duals diverged", fail);
  std::vector<long> ns{8};
  if (!ctx.quick) ns.push_back(12);
  std::string detail;
  for (long n : ns) {
    auto bm = upp_witness(*two_sided.dual, f, n, rat(3, 4), AmplifyMode::GapMaj,
                          rat(49, 100));
    expect(bm.claimed_phd == std::min<long>(bm.d, n), "unexpected claimed bound", fail);
    auto cm = certify_amplification(bm);
    expect(cm.accepted, "GapMaj certificate rejected at n=" + std::to_string(n) +
                            " (" + cm.failing + ")",
           fail);

    auto ba = upp_witness(*one_sided.dual, f, n, rat(3, 4), AmplifyMode::GapAnd,
                          rat(49, 100));
    auto ca = certify_amplification(ba);
    expect(ca.accepted, "GapAnd certificate rejected at n=" + std::to_string(n) +
                            " (" + ca.failing + ")",
           fail);
    detail += "n=" + std::to_string(n) + ": deg_pm > " +
              std::to_string(cm.deg_pm_exceeds) + " in both modes; ";
  }
  return finish(6, "end-to-end-amplification", 600, t0, fail, detail);
}

// --- criterion 7: upper-bound constructions sign-represent the composition

CriterionResult c7_upper(Ctx& ctx) {
  auto t0 = Clock::now();
  std::string fail;
  auto f = make_xor(2);
  MultilinearPoly p;
  p.arity = 2;
  p.set(0b01, Rational(1));
  p.set(0b10, Rational(1));
  p.set(0b11, Rational(-2));
  std::string detail;
  for (long m : {3L, 5L}) {
    for (AmplifyMode mode : {AmplifyMode::GapMaj, AmplifyMode::GapAnd}) {
      auto [q, rep] = threshold_upper(p, f, m, mode);
      expect(rep.sign_ok, "q fails to sign-represent at m=" + std::to_string(m), fail);
      auto comp = mode == AmplifyMode::GapMaj ? gap_maj(f, {m, rat(2, 3)})
                                              : gap_and(f, {m, rat(2, 3)});
      Rational lambda = threshold_dual_lambda(comp, q.degree(), ctx.fast);
      expect(sgn(lambda) > 0,
             "LP does not confirm deg_pm <= deg(q) at m=" + std::to_string(m), fail);
      detail += "m=" + std::to_string(m) +
                (mode == AmplifyMode::GapMaj ? " maj" : " and") + ": deg(q)=" +
                std::to_string(q.degree()) + " formal=" +
                std::to_string(rep.formal_degree) + "; ";
    }
  }
  return finish(7, "threshold-upper-bounds", 120, t0, fail, detail);
}

// --- criterion 8: the PP witness for PARITY3

CriterionResult c8_pp(Ctx&) {
  auto t0 = Clock::now();
  std::string fail;
  auto f = make_xor(3);
  auto r = approx_degree(f, rat(49, 100));
  auto w = pp_witness(*r.dual, f, 4, rat(2, 3), rat(49, 100));
  expect(w.psi.l1_norm() == 1, "witness is not unit norm", fail);
  expect(w.correlation == rat(1, 2), "correlation is not exactly 1/2", fail);
  // consistency of the certified level with the exact correlation
  expect(w.correlation >= rat(1, 2) ||
             w.correlation > rat(1, 2) - pow2_neg((unsigned long)w.certified_t),
         "certified level inconsistent with the correlation", fail);
  expect(w.certified_t == std::min<long>(w.mu_phd, w.psi.arity),
         "certified level not the capped value", fail);
  int phd = pure_high_degree(w.psi);
  expect(phd >= w.mu_phd, "product witness lost pure high degree", fail);
  // Required: phd >= 3. A nonzero function on 3 bits orthogonal to every
  // monomial of degree <= 3 does not exist, and the block-product inherits
  // the base correlation with the full cubic, so phd caps at 2 for every
  // valid base dual; the exact transform value is reported either way.
  expect(phd >= 3,
         "pure high degree is exactly " + std::to_string(phd) +
             "; a 3-bit base caps the product witness at 2, so the required"
             " bound cannot hold",
         fail);
  return finish(8, "pp-witness", 60, t0, fail,
                "corr = 1/2, certified T = " + std::to_string(w.certified_t));
}

// --- criterion 9: distribution lemmas

CriterionResult c9_dist(Ctx& ctx) {
  auto t0 = Clock::now();
  std::string fail;
  std::vector<std::string> dom{"a", "b", "c", "d"};
  for (int trial = 0; trial < 200; trial++) {
    std::vector<Rational> w0(4), w1(4);
    Rational s0(0), s1(0);
    for (int i = 0; i < 4; i++) {
      w0[i] = rand_rat(ctx.rng, 0, 4, 3);
      w1[i] = rand_rat(ctx.rng, 0, 4, 3);
      s0 += w0[i];
      s1 += w1[i];
    }
    if (sgn(s0) == 0 || sgn(s1) == 0) continue;
    for (int i = 0; i < 4; i++) {
      w0[i] /= s0;
      w1[i] /= s1;
    }
    auto p = Distribution::over(dom, w0);
    auto q = Distribution::over(dom, w1);
    // m2_accept cross-checks its closed form against branch enumeration
    // internally and throws on any mismatch.
    Rational acc = m2_accept(p, q);
    auto mm = metrics(p, q);
    expect(acc == rat(1, 2) + mm.l2sq / 8, "tester probability off", fail);
  }

  auto u = Distribution::uniform({"x", "y", "z"});
  auto post = postselect_three(u, u);
  for (const auto& m : post.mass)
    expect(m == rat(1, 8), "uniform postselection not uniform", fail);
  auto d0 = Distribution::point({"x", "y"}, 0);
  auto d1 = Distribution::point({"x", "y"}, 1);
  auto pd = postselect_three(d0, d1);
  for (size_t i = 0; i < pd.size(); i++) {
    bool diag = pd.labels[i] == "000" || pd.labels[i] == "111";
    expect(pd.mass[i] == (diag ? rat(1, 2) : Rational(0)),
           "disjoint-support postselection leaked", fail);
  }

  std::uniform_int_distribution<int> nn(1, 4), ll(0, 4);
  for (int trial = 0; trial < 100; trial++) {
    PseudoPolarizer pp;
    pp.n = nn(ctx.rng);
    pp.ell = ll(ctx.rng);
    size_t sz = size_t(1) << (pp.n + pp.ell);
    for (auto* j : {&pp.joint0, &pp.joint1}) {
      std::vector<Rational> w(sz);
      Rational total(0);
      for (auto& v : w) {
        v = Rational(long(ctx.rng() % 6));
        total += v;
      }
      if (sgn(total) == 0) {
        w[0] = 1;
        total = 1;
      }
      for (auto& v : w) v /= total;
      *j = std::move(w);
    }
    expect(polarizer_ratio_check(pp, rat(2, 3), rat(1, 3)),
           "polarizer ratio bound failed at trial " + std::to_string(trial), fail);
  }
  return finish(9, "distribution-lemmas", 120, t0, fail,
                "200 tester pairs, 100 polarizers");
}

// --- criterion 10: the two reductions

CriterionResult c10_reductions(Ctx& ctx) {
  auto t0 = Clock::now();
  std::string fail;
  for (int trial = 0; trial < 10; trial++) {
    GColInput x;
    x.k = 4;
    x.to1 = 2;
    x.eps = rat(3, 4);
    x.funcs.assign(4, std::vector<long>(4));
    for (auto& fn : x.funcs)
      for (auto& v : fn) v = 1 + long(ctx.rng() % 4);
    // reduce_gcol_to_sdu asserts the per-block identity internally; redo it
    // here against an independent recomputation.
    auto [d, rep] = reduce_gcol_to_sdu(x);
    Rational direct(0);
    Rational u = rat(1, 16);
    for (const auto& m : d.mass) direct += rabs(m - u);
    expect(direct / 2 == rep.avg_tvd, "TVD identity recomputation failed", fail);
  }
  for (int trial = 0; trial < 5; trial++) {
    long k = 4, dd = 2;
    std::vector<std::vector<long>> funcs(dd, std::vector<long>(k));
    for (auto& fn : funcs)
      for (auto& v : fn) v = 1 + long(ctx.rng() % k);
    auto rep = reduce_gapmajptp_to_ea(k, funcs);
    std::vector<Rational> joint(dd * k, Rational(0));
    for (long i = 0; i < dd; i++)
      for (long j = 0; j < k; j++)
        joint[i * k + funcs[i][j] - 1] += Rational(1, dd * k);
    auto direct = entropy_bracket(joint, 20);
    expect(rep.h_d.width() <= pow2_neg(20), "chain-rule bracket too wide", fail);
    expect(direct.width() <= pow2_neg(20), "direct bracket too wide", fail);
    expect(rep.h_d.overlaps(direct), "entropy brackets disagree", fail);
  }
  return finish(10, "reductions", 60, t0, fail, "GCol m=4 k=4; EA d=2 k=4");
}

// --- criterion 11: collision regression value

CriterionResult c11_col(Ctx& ctx) {
  auto t0 = Clock::now();
  std::string fail;
  auto col = make_col(4, 2);
  auto r = approx_degree(col, rat(1, 3), ctx.fast);
  // frozen on first computation: degree 4, level value 1/2 just below it
  expect(r.degree == 4, "deg~_{1/3}(COL(4,2)) changed: " + std::to_string(r.degree),
         fail);
  expect(r.dual_value && *r.dual_value == rat(1, 2),
         "level value below the degree changed", fail);
  return finish(11, "collision-regression", 0, t0, fail,
                "deg~_{1/3}(COL(4,2)) = 4, eps*(3) = 1/2");
}

// --- criterion 12: mutation fuzzing of accepted witnesses

CriterionResult c12_mutations(Ctx& ctx) {
  auto t0 = Clock::now();
  std::string fail;
  if (ctx.duals.empty())
    return finish(12, "mutation-robustness", 120, t0, "no duals collected", "");
  long rejected = 0;
  for (int trial = 0; trial < 100; trial++) {
    const StoredDual& sd = ctx.duals[ctx.rng() % ctx.duals.size()];
    CubeFn bad = sd.psi;
    Point x = Point(ctx.rng() % bad.cube_size());
    if (sgn(bad.at(x)) != 0 && ctx.rng() % 2 == 0)
      bad.at(x) = -bad.at(x);
    else
      bad.at(x) += rat(1 + long(ctx.rng() % 3), 1 + long(ctx.rng() % 3));
    auto rep = verify_dual(bad, sd.f, sd.kind, std::max(sd.d, 0),
                           sd.kind == WitnessKind::ThresholdDual
                               ? std::optional<Rational>()
                               : std::optional<Rational>(sd.eps));
    if (!rep.verdict) rejected++;
  }
  expect(rejected == 100, "only " + std::to_string(rejected) + "/100 rejected", fail);
  return finish(12, "mutation-robustness", 120, t0, fail, "100/100 rejected");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg) {
  Ctx ctx;
  ctx.rng.seed(cfg.seed);
  ctx.quick = cfg.quick;
  std::vector<CriterionResult> out;
  out.push_back(c1_degree_oracle(ctx));
  out.push_back(c2_convention(ctx));
  out.push_back(c3_lemma_mus(ctx));
  out.push_back(c4_psi_p(ctx));
  out.push_back(c5_helper(ctx));
  out.push_back(c6_amplify(ctx));
  out.push_back(c7_upper(ctx));
  out.push_back(c8_pp(ctx));
  out.push_back(c9_dist(ctx));
  out.push_back(c10_reductions(ctx));
  out.push_back(c11_col(ctx));
  out.push_back(c12_mutations(ctx));
  return out;
}

json suite_summary(const std::vector<CriterionResult>& results,
                   const SuiteConfig& cfg) {
  json j;
  j["seed"] = cfg.seed;
  j["quick"] = cfg.quick;
  j["threads"] = omp_get_max_threads();
  json arr = json::array();
  int failed = 0;
  for (const auto& r : results) {
    json e;
    e["id"] = r.id;
    e["name"] = r.name;
    e["pass"] = r.pass;
    e["seconds"] = r.seconds;
    if (r.budget > 0) {
      e["budget_seconds"] = r.budget;
      e["within_budget"] = r.seconds < r.budget;
    }
    e["details"] = r.details;
    arr.push_back(std::move(e));
    if (!r.pass) failed++;
  }
  j["criteria"] = std::move(arr);
  j["failed"] = failed;
  return j;
}

}  // namespace dualdeg
