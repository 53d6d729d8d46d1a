#include "dualdeg/dist.hpp"

#include <bit>

namespace dualdeg {

void Distribution::validate() const {
  if (labels.size() != mass.size()) throw InvalidParams("label/mass size mismatch");
  Rational total(0);
  for (const auto& m : mass) {
    if (sgn(m) < 0) throw InvalidParams("negative mass");
    total += m;
  }
  if (total != 1) throw InvalidParams("masses must sum to 1");
}

Distribution Distribution::over(std::vector<std::string> labels,
                                std::vector<Rational> mass) {
  Distribution d;
  d.labels = std::move(labels);
  d.mass = std::move(mass);
  d.validate();
  return d;
}

Distribution Distribution::uniform(std::vector<std::string> labels) {
  size_t n = labels.size();
  if (n == 0) throw InvalidParams("empty domain");
  return over(std::move(labels), std::vector<Rational>(n, Rational(1, long(n))));
}

Distribution Distribution::point(std::vector<std::string> labels, size_t at) {
  if (at >= labels.size()) throw InvalidParams("point index out of range");
  std::vector<Rational> m(labels.size(), Rational(0));
  m[at] = 1;
  return over(std::move(labels), std::move(m));
}

namespace {

void require_same_domain(const Distribution& p, const Distribution& q) {
  if (p.labels != q.labels) throw DomainMismatch("distributions on different domains");
}

}  // namespace

DistMetrics metrics(const Distribution& p, const Distribution& q,
                    unsigned entropy_bits) {
  require_same_domain(p, q);
  DistMetrics m;
  m.tvd = 0;
  m.l2sq = 0;
  for (size_t i = 0; i < p.size(); i++) {
    Rational d = p.mass[i] - q.mass[i];
    m.tvd += rabs(d);
    m.l2sq += d * d;
  }
  m.tvd /= 2;
  m.entropy_p = entropy_bracket(p.mass, entropy_bits);
  return m;
}

Rational m2_accept(const Distribution& p, const Distribution& q) {
  require_same_domain(p, q);
  Rational pp(0), qq(0), pq(0), diff(0);
  for (size_t i = 0; i < p.size(); i++) {
    pp += p.mass[i] * p.mass[i];
    qq += q.mass[i] * q.mass[i];
    pq += p.mass[i] * q.mass[i];
    Rational d = p.mass[i] - q.mass[i];
    diff += d * d;
  }
  Rational formula = rat(1, 2) + diff / 8;
  // Branch enumeration: two same-p samples, two same-q samples, one of each.
  Rational enumerated = rat(1, 4) * (pp + (1 - pp) / 2) +
                        rat(1, 4) * (qq + (1 - qq) / 2) +
                        rat(1, 2) * ((1 - pq) / 2);
  if (formula != enumerated) throw Error("m2_accept identity violated");
  return formula;
}

namespace {

// Distribution of f(i) for uniform i, as masses over [k].
std::vector<Rational> image_mass(const std::vector<long>& f, long k) {
  std::vector<Rational> m(k, Rational(0));
  Rational w(1, k);
  for (long v : f) {
    if (v < 1 || v > k) throw InvalidInput("map value out of range");
    m[v - 1] += w;
  }
  return m;
}

bool is_perm(const std::vector<long>& f, long k) {
  std::vector<bool> seen(k + 1, false);
  for (long v : f) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_to1(const std::vector<long>& f, long k, long t) {
  std::vector<long> cnt(k + 1, 0);
  for (long v : f) cnt[v]++;
  for (long v = 1; v <= k; v++)
    if (cnt[v] != 0 && cnt[v] != t) return false;
  return true;
}

}  // namespace

std::pair<Distribution, GColReport> reduce_gcol_to_sdu(const GColInput& x) {
  if (x.k < 1 || x.funcs.empty()) throw InvalidInput("bad GCol instance");
  const long m = (long)x.funcs.size();
  for (const auto& f : x.funcs)
    if ((long)f.size() != x.k) throw InvalidInput("each map needs k values");

  GColReport rep;
  std::vector<std::string> labels;
  std::vector<Rational> mass;
  labels.reserve(m * x.k);
  mass.reserve(m * x.k);
  Rational uk(1, x.k);
  for (long i = 0; i < m; i++) {
    auto im = image_mass(x.funcs[i], x.k);
    Rational tv(0);
    for (long v = 0; v < x.k; v++) tv += rabs(im[v] - uk);
    rep.block_tvd.push_back(tv / 2);
    if (is_perm(x.funcs[i], x.k)) rep.perm_count++;
    if (x.to1 >= 2 && is_to1(x.funcs[i], x.k, x.to1) && !is_perm(x.funcs[i], x.k))
      rep.to1_count++;
    for (long v = 0; v < x.k; v++) {
      labels.push_back(std::to_string(i + 1) + ":" + std::to_string(v + 1));
      mass.push_back(im[v] / m);
    }
  }
  Distribution d = Distribution::over(std::move(labels), std::move(mass));

  // TVD from uniform decomposes as the average of per-block TVDs.
  Rational direct(0);
  Rational u(1, m * x.k);
  for (const auto& mm : d.mass) direct += rabs(mm - u);
  direct /= 2;
  rep.avg_tvd = 0;
  for (const auto& t : rep.block_tvd) rep.avg_tvd += t;
  rep.avg_tvd /= m;
  if (direct != rep.avg_tvd) throw Error("per-block TVD identity violated");

  if (sgn(x.eps) > 0) {
    if (Rational(rep.perm_count) >= x.eps * m) rep.gapmaj_value = 1;
    if (Rational(rep.to1_count) >= x.eps * m) rep.gapmaj_value = 0;
    if (rep.gapmaj_value == 1) rep.yes_bound_ok = rep.avg_tvd <= 1 - x.eps;
    if (rep.gapmaj_value == 0 && x.to1 >= 2)
      rep.no_bound_ok = rep.avg_tvd >= x.eps * (1 - Rational(1, x.to1));
  }
  unsigned long atoms = (unsigned long)(m * x.k);
  if (std::has_single_bit(atoms)) {
    rep.output_bits = std::countr_zero(atoms);
    if (rep.output_bits > 0) {
      Rational inv_bits(1, rep.output_bits);
      if (rep.avg_tvd < inv_bits) rep.sdu_value = 1;
      if (rep.avg_tvd > 1 - inv_bits) rep.sdu_value = 0;
    }
  }
  return {std::move(d), std::move(rep)};
}

EAReport reduce_gapmajptp_to_ea(long k, const std::vector<std::vector<long>>& funcs,
                                unsigned entropy_bits) {
  const long d = (long)funcs.size();
  if (d < 1 || k < 1) throw InvalidInput("bad EA instance");
  if (!std::has_single_bit((unsigned long)d) || !std::has_single_bit((unsigned long)k))
    throw InvalidParams("d and k must be powers of two for an exact threshold");

  EAReport rep;
  // H(D(x)) = log d + (1/d) sum_i H(D_{f_i}): the pair (I, f_I(J)) has a
  // uniform first coordinate and the block distribution conditionally.
  Bracket acc{Rational(0), Rational(0), true};
  for (const auto& f : funcs) {
    if ((long)f.size() != k) throw InvalidInput("each map needs k values");
    Bracket h = entropy_bracket(image_mass(f, k), entropy_bits + 4);
    rep.block_entropy.push_back(h);
    acc.lo += h.lo;
    acc.hi += h.hi;
    acc.exact = acc.exact && h.exact;
  }
  long logd = std::countr_zero((unsigned long)d);
  rep.h_d = {Rational(logd) + acc.lo / d, Rational(logd) + acc.hi / d, acc.exact};
  rep.h_a = {50 * rep.h_d.lo, 50 * rep.h_d.hi, rep.h_d.exact};

  long logdk = logd + std::countr_zero((unsigned long)k);
  rep.threshold = Rational(50) * logdk - rat(25, 4);
  if (rep.h_a.lo > rep.threshold + 1) rep.classification = 1;
  if (rep.h_a.hi < rep.threshold - 1) rep.classification = 0;
  return rep;
}

void PseudoPolarizer::validate() const {
  size_t want = size_t(1) << (n + ell);
  if (joint0.size() != want || joint1.size() != want)
    throw InvalidParams("joint mass size mismatch");
  for (const auto* j : {&joint0, &joint1}) {
    Rational total(0);
    for (const auto& m : *j) {
      if (sgn(m) < 0) throw InvalidParams("negative mass");
      total += m;
    }
    if (total != 1) throw InvalidParams("joint mass must sum to 1");
  }
}

namespace {

// Apply B_alpha to each of the first n coordinates: the [[1+a,1-a],[1-a,1+a]]/2
// mixing acts independently per bit, like a transform pass.
std::vector<Rational> apply_c_alpha(const std::vector<Rational>& v, int n,
                                    const Rational& alpha) {
  std::vector<Rational> out = v;
  Rational half_plus = (1 + alpha) / 2, half_minus = (1 - alpha) / 2;
  for (int i = 0; i < n; i++) {
    size_t bit = size_t(1) << i;
    for (size_t x = 0; x < out.size(); x++) {
      if (x & bit) continue;
      Rational a = out[x], b = out[x | bit];
      out[x] = half_plus * a + half_minus * b;
      out[x | bit] = half_minus * a + half_plus * b;
    }
  }
  return out;
}

Rational tvd_of(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational t(0);
  for (size_t i = 0; i < a.size(); i++) t += rabs(a[i] - b[i]);
  return t / 2;
}

}  // namespace

PolarizerResult polarizer_apply(const PseudoPolarizer& pp, const Rational& alpha) {
  if (!(alpha > 0 && alpha < 1)) throw InvalidParams("alpha must lie in (0,1)");
  pp.validate();
  PolarizerResult r;
  r.d0 = apply_c_alpha(pp.joint0, pp.n, alpha);
  r.d1 = apply_c_alpha(pp.joint1, pp.n, alpha);
  r.tvd = tvd_of(r.d0, r.d1);
  return r;
}

bool polarizer_ratio_check(const PseudoPolarizer& pp, const Rational& alpha,
                           const Rational& beta) {
  if (!(beta > 0 && beta < alpha)) throw InvalidParams("need 0 < beta < alpha");
  Rational ta = polarizer_apply(pp, alpha).tvd;
  Rational tb = polarizer_apply(pp, beta).tvd;
  Rational lhs = ta * ta;
  Rational ratio = alpha / beta;
  Rational rhs = tb * tb * rat_pow(ratio, (unsigned long)(2 * pp.n));
  mpq_mul_2exp(rhs.get_mpq_t(), rhs.get_mpq_t(), (unsigned long)(pp.n + pp.ell));
  return lhs <= rhs;
}

Distribution postselect_three(const Distribution& d0, const Distribution& d1) {
  require_same_domain(d0, d1);
  const Distribution* d[2] = {&d0, &d1};
  std::vector<std::string> labels;
  std::vector<Rational> s(8, Rational(0));
  Rational total(0);
  for (int b = 0; b < 8; b++) {
    std::string lab;
    for (int j = 0; j < 3; j++) lab += ((b >> j) & 1) ? '1' : '0';
    labels.push_back(lab);
    for (size_t y = 0; y < d0.size(); y++)
      s[b] += d[b & 1]->mass[y] * d[(b >> 1) & 1]->mass[y] * d[(b >> 2) & 1]->mass[y];
    total += s[b];
  }
  if (sgn(total) == 0) throw Unconditionable("no triple collision has positive mass");
  for (auto& v : s) v /= total;
  return Distribution::over(std::move(labels), std::move(s));
}

}  // namespace dualdeg
