#include "doctest.h"

#include <bit>

#include "dualdeg/amplify.hpp"
#include "dualdeg/verify.hpp"
#include "testutil.hpp"

using namespace dualdeg;

namespace {

CubeFn parity_witness(int m) {
  CubeFn c(m);
  Rational w = pow2_neg(m);
  for (Point x = 0; x < c.cube_size(); x++)
    c.at(x) = (std::popcount(x) & 1) ? w : Rational(-w);
  return c;
}

}  // namespace

TEST_CASE("approx dual verification of the parity witness") {
  auto f = make_xor(3);
  CubeFn psi = parity_witness(3);
  auto rep = verify_dual(psi, f, WitnessKind::ApproxDual, 2, rat(49, 100));
  CHECK(rep.verdict);
  CHECK(rep.verified_phd == 2);
  CHECK(rep.find("correlation_gt_eps")->value == "1/2");

  // At eps = 1/2 the strict inequality fails on the tie.
  auto tie = verify_dual(psi, f, WitnessKind::ApproxDual, 2, rat(1, 2));
  CHECK_FALSE(tie.verdict);
}

TEST_CASE("verification rejects mismatched arities") {
  CubeFn psi(2);
  CHECK_THROWS_AS(
      verify_dual(psi, make_xor(3), WitnessKind::ApproxDual, 1, rat(1, 3)),
      ArityError);
}

TEST_CASE("threshold verification rejects trivial and off-domain witnesses") {
  auto f = make_xor(3);
  CubeFn zero(3);
  CHECK_FALSE(verify_dual(zero, f, WitnessKind::ThresholdDual, 0, std::nullopt).verdict);

  auto partial = PartialBoolFn::explicit_fn(
      2, {uint8_t(Val::One), uint8_t(Val::Zero), uint8_t(Val::Zero), uint8_t(Val::Undef)});
  CubeFn leak(2);
  leak.at(0b00) = rat(1, 2);
  leak.at(0b11) = rat(-1, 2);
  auto rep = verify_dual(leak, partial, WitnessKind::ThresholdDual, 0, std::nullopt);
  CHECK_FALSE(rep.verdict);
  CHECK_FALSE(rep.find("support_in_domain")->pass);
}

TEST_CASE("threshold verification is scale invariant") {
  auto f = make_xor(3);
  auto r = threshold_degree(f);
  REQUIRE(r.dual.has_value());
  CubeFn scaled = *r.dual;
  for (auto& v : scaled.values) v *= 7;
  auto a = verify_dual(*r.dual, f, WitnessKind::ThresholdDual, r.degree - 1, std::nullopt);
  auto b = verify_dual(scaled, f, WitnessKind::ThresholdDual, r.degree - 1, std::nullopt);
  CHECK(a.verdict);
  CHECK(b.verdict);
}

TEST_CASE("degree outputs round-trip through verification") {
  auto g = testutil::rng(61);
  for (int trial = 0; trial < 8; trial++) {
    auto f = testutil::rand_partial_fn(g, 3);
    auto r = approx_degree(f, rat(1, 3));
    if (r.dual)
      CHECK(verify_dual(*r.dual, f, WitnessKind::ApproxDual, r.degree - 1, rat(1, 3))
                .verdict);
    if (f.domain_size() > 0) {
      auto t = threshold_degree(f);
      if (t.dual)
        CHECK(verify_dual(*t.dual, f, WitnessKind::ThresholdDual, t.degree - 1,
                          std::nullopt)
                  .verdict);
    }
  }
}

TEST_CASE("single-point mutations are always caught") {
  auto g = testutil::rng(62);
  auto f = make_xor(3);
  auto r = approx_degree(f, rat(1, 3));
  REQUIRE(r.dual.has_value());
  for (int trial = 0; trial < 30; trial++) {
    CubeFn bad = *r.dual;
    Point x = Point(g() % bad.cube_size());
    if (sgn(bad.at(x)) != 0 && g() % 2 == 0)
      bad.at(x) = -bad.at(x);  // sign flip keeps the l1 norm
    else
      bad.at(x) += testutil::rand_rational(g, 1, 3);
    auto rep = verify_dual(bad, f, WitnessKind::ApproxDual, r.degree - 1, rat(1, 3));
    CHECK_FALSE(rep.verdict);
  }
}

TEST_CASE("error correction report on the zero-correction case") {
  auto f = make_xor(2);
  auto r = approx_degree(f, rat(49, 100));
  auto [parts, l41] = decompose_dual(*r.dual, f, r.degree - 1, rat(49, 100), false);
  std::vector<uint8_t> ones(4);
  for (Point b = 0; b < 4; b++) ones[b] = f.at(b) == Val::One;
  long n = 6;
  auto ec = error_correct(parts.plus, ones, n, rat(3, 4));
  auto rep = verify_error_correction(ec.psi_corr, parts.plus, ones, n, rat(3, 4),
                                     std::nullopt);
  CHECK(rep.verdict);
  CHECK(rep.find("equal_below_threshold")->pass);
  CHECK(rep.find("half_bound_above_threshold")->pass);
}

TEST_CASE("error correction catches adversarial perturbation") {
  auto g = testutil::rng(63);
  // nonnegative phi with nonzero alpha
  CubeFn phi(2);
  phi.at(0b00) = rat(1, 100);
  phi.at(0b01) = rat(1, 2);
  phi.at(0b10) = rat(1, 2);
  std::vector<uint8_t> in_a{0, 1, 1, 0};
  long n = 5;
  auto ec = error_correct(phi, in_a, n, rat(3, 4));
  CHECK_FALSE(ec.spec.zero_correction);
  CHECK(ec.spec.alpha == rat(1, 100));
  auto rep = verify_error_correction(ec.psi_corr, phi, in_a, n, rat(3, 4),
                                     ec.spec.p->degree());
  CHECK(rep.find("equal_below_threshold")->pass);
  CHECK(rep.find("phd_vs_constructed")->pass);

  CubeFn bad = ec.psi_corr;
  Point x = 0;
  while (sgn(bad.at(x)) == 0) x = Point(g() % bad.cube_size());
  bad.at(x) += rat(1, 7);
  auto brep = verify_error_correction(bad, phi, in_a, n, rat(3, 4),
                                      ec.spec.p->degree());
  CHECK_FALSE(brep.verdict);
}

TEST_CASE("certification sweeps work past the dense cap") {
  // arity 18 forces the lazy block-product path
  auto f = make_xor(2);
  auto r = approx_degree(f, rat(49, 100));
  auto b = upp_witness(*r.dual, f, 9, rat(3, 4), AmplifyMode::GapMaj, rat(49, 100));
  CHECK_FALSE(b.psi.has_value());
  auto cert = certify_amplification(b);
  CHECK(cert.accepted);
  CHECK(cert.phd_bound == 1);

  AmplifyBundle tampered = b;
  tampered.claimed_phd = 2;  // the product witness correlates with full-block quadratics
  auto bad = certify_amplification(tampered);
  CHECK_FALSE(bad.accepted);
  CHECK(bad.failing == "pure_high_degree");
}

TEST_CASE("certificates reject tampered bundles") {
  // GapAnd mode fed with a two-sided decomposition: support must leak.
  auto f = make_xor(2);
  auto r = approx_degree(f, rat(49, 100));
  auto bundle = upp_witness(*r.dual, f, 4, rat(3, 4), AmplifyMode::GapMaj, rat(49, 100));
  auto ok = certify_amplification(bundle);
  CHECK(ok.accepted);

  AmplifyBundle tampered = bundle;
  tampered.mode = AmplifyMode::GapAnd;
  // XOR2's witness is one-sided, so even the GapAnd sweep accepts it; break
  // it by inflating the claimed degree instead.
  tampered.claimed_phd = 3;
  auto cert = certify_amplification(tampered);
  CHECK_FALSE(cert.accepted);
  CHECK(cert.failing == "pure_high_degree");

  // A genuinely two-sided mu pushed through the GapAnd sweep leaks support.
  CubeFn mu(2);
  mu.at(0b00) = rat(1, 8);
  mu.at(0b01) = rat(1, 4);
  mu.at(0b10) = rat(1, 8);
  mu.at(0b11) = rat(-1, 2);
  auto [parts, l41] = decompose_dual(mu, f, 0, rat(1, 10), false);
  AmplifyBundle manual;
  manual.f = f;
  manual.mu = mu;
  manual.d = 0;
  manual.eps2 = rat(1, 10);
  manual.n = 4;
  manual.eps = rat(3, 4);
  manual.mode = AmplifyMode::GapAnd;
  manual.parts = parts;
  manual.corr_plus.zero_correction = true;
  manual.corr_minus.zero_correction = true;
  manual.claimed_phd = 0;
  auto bad = certify_amplification(manual);
  CHECK_FALSE(bad.accepted);
  CHECK(bad.failing == "support_in_domain");
}
