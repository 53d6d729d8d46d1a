#include "dualdeg/amplify.hpp"

#include <bit>

#include "dualdeg/verify.hpp"

namespace dualdeg {

CubeFn product_lift(const CubeFn& phi, long n, int cap) {
  if (n < 1) throw InvalidParams("need n >= 1");
  long arity = n * phi.arity;
  if (arity > cap) throw TooLarge("product arity exceeds cap");
  CubeFn out{static_cast<int>(arity)};
  const Point mask = (Point(1) << phi.arity) - 1;
  for (Point x = 0; x < out.cube_size(); x++) {
    Rational prod(1);
    for (long i = 0; i < n && sgn(prod) != 0; i++)
      prod *= phi.at((x >> (i * phi.arity)) & mask);
    out.at(x) = prod;
  }
  return out;
}

std::pair<CubeFn, CubeFn> product_witness(const MuParts& parts, long n, int cap) {
  return {product_lift(parts.plus, n, cap), product_lift(parts.minus, n, cap)};
}

CubeFn psi_p(const CubeFn& phi, const std::vector<uint8_t>& in_a, long n,
             const UnivariatePoly& p, const Rational& alpha, int cap) {
  if (in_a.size() != phi.cube_size()) throw ArityError("A predicate size mismatch");
  long arity = n * phi.arity;
  if (arity > cap) throw TooLarge("psi_p arity exceeds cap");
  // The (-alpha)^c weight is what makes psi_P a combination of the psi_k;
  // with P interpolating (-a)^c it also cancels to +1 below the threshold.
  std::vector<Rational> factor(n + 1);
  for (long c = 0; c <= n; c++)
    factor[c] = rat_pow(-alpha, (unsigned long)c) * p.eval(Rational(c));

  CubeFn out{static_cast<int>(arity)};
  const Point mask = (Point(1) << phi.arity) - 1;
  for (Point x = 0; x < out.cube_size(); x++) {
    Rational prod(1);
    long cnt = 0;
    for (long i = 0; i < n; i++) {
      Point b = (x >> (i * phi.arity)) & mask;
      if (in_a[b]) cnt++;
      if (sgn(prod) != 0) prod *= phi.at(b);
    }
    if (sgn(prod) != 0) out.at(x) = prod * factor[cnt];
  }
  return out;
}

PPWitness pp_witness(const CubeFn& mu, const PartialBoolFn& f, long n,
                     const Rational& eps, const Rational& eps2) {
  if (!(eps > rat(1, 2) && eps < 1)) throw InvalidParams("need 1/2 < eps < 1");
  if (!(2 * eps2 > eps)) throw InvalidParams("need 2*eps2 > eps");
  int d = pure_high_degree(mu);
  auto rep = verify_dual(mu, f, WitnessKind::ApproxDual, d, eps2);
  if (!rep.verdict) throw NotADualWitness("mu fails the approximate-degree dual conditions");
  auto [parts, l41] = decompose_dual(mu, f, d, eps2, false);

  auto [psi_plus, psi_minus] = product_witness(parts, n, kDenseArityCap);
  PPWitness out;
  out.mu_phd = d;
  out.psi = CubeFn(psi_plus.arity);
  Rational scale = rat_pow(Rational(2), (unsigned long)(n - 1));
  for (Point x = 0; x < out.psi.cube_size(); x++)
    out.psi.at(x) = scale * (psi_plus.at(x) - psi_minus.at(x));

  PartialBoolFn F = gap_maj(f, {n, eps});
  Rational corr(0);
  for (Point x = 0; x < out.psi.cube_size(); x++) {
    int s = sgn(out.psi.at(x));
    if (s == 0) continue;
    if (F.in_domain(x))
      corr += out.psi.at(x) * F.value_of(x);
    else
      corr -= s > 0 ? out.psi.at(x) : Rational(-out.psi.at(x));
  }
  out.correlation = corr;

  long arity = out.psi.arity;
  if (corr >= rat(1, 2)) {
    out.certified_t = std::min<long>(d, arity);
  } else {
    // largest T with corr > 1/2 - 2^-T
    long best = -1;
    for (long t = 0; t <= arity; t++)
      if (corr > rat(1, 2) - pow2_neg((unsigned long)t)) best = t;
    out.certified_t = std::min<long>(d, best);
  }
  return out;
}

namespace {

CorrectionSpec build_correction(const CubeFn& phi_part, const Rational& norm_on_a,
                                long n, const Rational& eps, const ECOptions& opt) {
  CorrectionSpec spec;
  Rational total = phi_part.l1_norm();
  if (sgn(norm_on_a) == 0) throw InvalidParams("phi vanishes on A");
  spec.alpha = (total - norm_on_a) / norm_on_a;
  if (sgn(spec.alpha) == 0) {
    // The product already lives entirely inside A-blocks.
    spec.zero_correction = true;
    return spec;
  }
  if (spec.alpha >= rat(1, 40) && !opt.override_alpha)
    throw AlphaTooLarge("alpha >= 1/40; pass the override to proceed with post-hoc checks");
  Rational a = Rational(1) / spec.alpha;
  if (opt.custom_p) {
    spec.p = *opt.custom_p;
    // Report the bound checks for the replacement exactly as for the stock P.
    HelperReport hr;
    hr.a = a;
    hr.eps_n_floor = floor_rat(eps * n).get_si();
    hr.N = spec.p->degree();
    for (long x = hr.eps_n_floor + 1; x <= n; x++) {
      bool ok = rabs(spec.p->eval(Rational(x))) <= rat_pow(a, (unsigned long)x) / 2;
      hr.bound_checks.emplace_back(x, ok);
      hr.bound_all_pass = hr.bound_all_pass && ok;
    }
    for (long x = 0; x <= hr.eps_n_floor; x++) {
      Rational want = rat_pow(a, (unsigned long)x);
      if (x & 1) want = -want;
      if (spec.p->eval(Rational(x)) != want) hr.interpolation_ok = false;
    }
    spec.helper_report = std::move(hr);
  } else {
    auto [p, hr] = helper_p(a, n, eps);
    spec.p = std::move(p);
    spec.helper_report = std::move(hr);
  }
  spec.factor.resize(n + 1);
  for (long c = 0; c <= n; c++)
    spec.factor[c] =
        rat_pow(-spec.alpha, (unsigned long)c) * spec.p->eval(Rational(c));
  return spec;
}

}  // namespace

ECResult error_correct(const CubeFn& phi, const std::vector<uint8_t>& in_a,
                       long n, const Rational& eps, const ECOptions& opt) {
  if (in_a.size() != phi.cube_size()) throw ArityError("A predicate size mismatch");
  for (const auto& v : phi.values)
    if (sgn(v) < 0) throw InvalidParams("error_correct needs nonnegative phi");
  long arity = n * phi.arity;
  if (arity > kDenseArityCap) throw TooLarge("error_correct arity exceeds dense cap");

  Rational on_a(0);
  for (Point b = 0; b < phi.cube_size(); b++)
    if (in_a[b]) on_a += phi.at(b);

  ECResult res;
  res.spec = build_correction(phi, on_a, n, eps, opt);
  if (res.spec.zero_correction)
    res.psi_corr = CubeFn(int(arity));
  else
    res.psi_corr = psi_p(phi, in_a, n, *res.spec.p, res.spec.alpha, kDenseArityCap);
  auto rep = verify_error_correction(
      res.psi_corr, phi, in_a, n, eps,
      res.spec.p ? std::optional<int>(res.spec.p->degree()) : std::nullopt);
  for (const auto& c : rep.checks) res.report.emplace_back(c.name, c.pass);
  res.all_pass = rep.verdict;
  return res;
}

AmplifyBundle upp_witness(const CubeFn& mu, const PartialBoolFn& f, long n,
                          const Rational& eps, AmplifyMode mode,
                          const Rational& eps2, const ECOptions& opt) {
  if (!(eps > rat(1, 2) && eps < 1)) throw InvalidParams("need 1/2 < eps < 1");
  if (f.conv != Convention::ZeroOne)
    throw InvalidParams("amplification expects the 0/1 convention");

  AmplifyBundle b;
  b.f = f;
  b.mu = mu;
  b.n = n;
  b.eps = eps;
  b.eps2 = eps2;
  b.mode = mode;
  b.d = pure_high_degree(mu);

  bool onesided = mode == AmplifyMode::GapAnd;
  auto rep = verify_dual(mu, f,
                         onesided ? WitnessKind::OneSidedDual : WitnessKind::ApproxDual,
                         b.d, eps2);
  if (!rep.verdict) {
    if (onesided)
      throw WrongWitnessKind("GapAND mode needs a one-sided dual witness");
    throw NotADualWitness("mu fails the dual conditions");
  }
  auto [parts, l41] = decompose_dual(mu, f, b.d, eps2, onesided);
  b.parts = std::move(parts);

  std::vector<uint8_t> in_one(f.cube_size()), in_zero(f.cube_size());
  for (Point v = 0; v < f.cube_size(); v++) {
    in_one[v] = f.at(v) == Val::One;
    in_zero[v] = f.at(v) == Val::Zero;
  }
  b.corr_plus = build_correction(b.parts.plus, b.parts.plus1.l1_norm(), n, eps, opt);
  b.corr_minus = build_correction(b.parts.minus, b.parts.minus0.l1_norm(), n, eps, opt);

  int max_deg_p = -1;
  Rational max_alpha(0);
  for (const CorrectionSpec* s : {&b.corr_plus, &b.corr_minus}) {
    if (!s->zero_correction) {
      max_deg_p = std::max(max_deg_p, s->p->degree());
      max_alpha = std::max(max_alpha, s->alpha);
    }
  }
  b.claimed_phd = std::min<long>(b.d, n - max_deg_p - 1);
  b.a_construction = sgn(max_alpha) == 0 ? Rational(0) : Rational(1) / max_alpha;
  b.a_margin = 2 * eps2 / (1 - 2 * eps2);
  Rational ten_over_a = sgn(max_alpha) == 0 ? Rational(0) : 10 * max_alpha;
  b.formula_n = (1 - (1 + ten_over_a) * eps) * n - 4;

  if (b.composed_arity() <= kMaterializeArityCap) {
    auto [pp, pm] = product_witness(b.parts, n, kDenseArityCap);
    b.psi_corr_plus = b.corr_plus.zero_correction
                          ? CubeFn(b.composed_arity())
                          : psi_p(b.parts.plus, in_one, n, *b.corr_plus.p,
                                  b.corr_plus.alpha, kDenseArityCap);
    b.psi_corr_minus = b.corr_minus.zero_correction
                           ? CubeFn(b.composed_arity())
                           : psi_p(b.parts.minus, in_zero, n, *b.corr_minus.p,
                                   b.corr_minus.alpha, kDenseArityCap);
    CubeFn psi(b.composed_arity());
    for (Point x = 0; x < psi.cube_size(); x++)
      psi.at(x) = (pp.at(x) - b.psi_corr_plus->at(x)) -
                  (pm.at(x) - b.psi_corr_minus->at(x));
    b.psi_plus = std::move(pp);
    b.psi_minus = std::move(pm);
    b.psi = std::move(psi);
  }
  return b;
}

std::pair<MultilinearPoly, ThresholdUpperReport> threshold_upper(
    const MultilinearPoly& p, const PartialBoolFn& f, long m, AmplifyMode mode) {
  if (p.arity != f.arity) throw ArityError("approximator arity mismatch");
  if (p.conv != f.conv) throw InvalidParams("approximator convention mismatch");
  if (m < 1) throw InvalidParams("need m >= 1");

  // Re-check the 1/20 approximation quality the construction relies on.
  const Rational tol = rat(1, 20);
  std::vector<Rational> pv(f.cube_size());
  for (Point x = 0; x < f.cube_size(); x++) pv[x] = p.eval(x);
  for (Point x = 0; x < f.cube_size(); x++) {
    Val v = f.at(x);
    if (mode == AmplifyMode::GapMaj) {
      if (v != Val::Undef) {
        if (rabs(pv[x] - f.value_of(x)) > tol) throw BadApproximator("p misses 1/20 on the domain");
      } else if (rabs(pv[x]) > 1 + tol) {
        throw BadApproximator("p unbounded off the domain");
      }
    } else {
      if (v == Val::One && rabs(pv[x] - 1) > tol)
        throw BadApproximator("p misses 1/20 on ones");
      if (v == Val::Zero && pv[x] > tol) throw BadApproximator("p exceeds 1/20 on zeros");
    }
  }

  // Per-block polynomial: p^2 (GapMaj) or p (GapAnd), multilinearized.
  MultilinearPoly blockpoly;
  blockpoly.arity = p.arity;
  blockpoly.conv = p.conv;
  if (mode == AmplifyMode::GapMaj) {
    for (const auto& [s, cs] : p.coeffs)
      for (const auto& [t, ct] : p.coeffs) {
        uint32_t mono = p.conv == Convention::ZeroOne ? (s | t) : (s ^ t);
        auto it = blockpoly.coeffs.find(mono);
        Rational cur = it == blockpoly.coeffs.end() ? Rational(0) : it->second;
        blockpoly.set(mono, cur + cs * ct);
      }
  } else {
    blockpoly = p;
  }

  long arity = m * p.arity;
  if (arity > kDenseArityCap) throw TooLarge("composition arity exceeds cap");
  MultilinearPoly q;
  q.arity = int(arity);
  q.conv = p.conv;
  Rational inv_m = Rational(1) / Rational(m);
  for (long i = 0; i < m; i++)
    for (const auto& [mono, c] : blockpoly.coeffs) {
      uint32_t lifted = mono << (i * p.arity);
      auto it = q.coeffs.find(lifted);
      Rational cur = it == q.coeffs.end() ? Rational(0) : it->second;
      q.set(lifted, cur + c * inv_m);
    }
  {
    auto it = q.coeffs.find(0);
    Rational cur = it == q.coeffs.end() ? Rational(0) : it->second;
    q.set(0, cur - rat(1, 2));
  }

  ThresholdUpperReport rep;
  rep.formal_degree = mode == AmplifyMode::GapMaj ? 2 * p.degree() : p.degree();
  rep.multilinear_degree = q.degree();

  PartialBoolFn F = mode == AmplifyMode::GapMaj ? gap_maj(f, {m, rat(2, 3)})
                                                : gap_and(f, {m, rat(2, 3)});
  const Point mask = (Point(1) << p.arity) - 1;
  rep.sign_ok = true;
  bool have_one = false, have_zero = false;
  for (Point x = 0; x < F.cube_size(); x++) {
    Val v = F.at(x);
    if (v == Val::Undef) continue;
    Rational val(0);
    for (long i = 0; i < m; i++) {
      const Rational& b = pv[(x >> (i * p.arity)) & mask];
      val += mode == AmplifyMode::GapMaj ? b * b : b;
    }
    val = val * inv_m - rat(1, 2);
    if (v == Val::One) {
      rep.ones_checked++;
      if (!have_one || val < rep.min_on_ones) rep.min_on_ones = val;
      have_one = true;
      if (sgn(val) <= 0) rep.sign_ok = false;
    } else {
      rep.zeros_checked++;
      if (!have_zero || val > rep.max_on_zeros) rep.max_on_zeros = val;
      have_zero = true;
      if (sgn(val) >= 0) rep.sign_ok = false;
    }
  }
  return {std::move(q), std::move(rep)};
}

}  // namespace dualdeg
