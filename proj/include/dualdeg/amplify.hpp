#pragma once

#include <optional>

#include "dualdeg/boolfn.hpp"
#include "dualdeg/degree.hpp"
#include "dualdeg/polylib.hpp"

namespace dualdeg {

// Dense CubeFns are materialized up to this arity; above it the
// amplification pipeline evaluates block products on the fly.
constexpr int kDenseArityCap = 20;
constexpr int kMaterializeArityCap = 16;

enum class AmplifyMode { GapMaj, GapAnd };

// psi(x) = prod_i phi(x_i) over n blocks.
CubeFn product_lift(const CubeFn& phi, long n, int cap = kDenseArityCap);

std::pair<CubeFn, CubeFn> product_witness(const MuParts& parts, long n,
                                          int cap = kDenseArityCap);

// psi_P(x) = alpha^{n_A(x)} * psi(x) * P(n_A(x)).
CubeFn psi_p(const CubeFn& phi, const std::vector<uint8_t>& in_a, long n,
             const UnivariatePoly& p, const Rational& alpha,
             int cap = kDenseArityCap);

struct PPWitness {
  CubeFn psi;
  Rational correlation;   // exact, against GapMaj(f,n,eps)
  long certified_t = 0;   // min(d, largest T with corr > 1/2 - 2^-T)
  int mu_phd = 0;
};
PPWitness pp_witness(const CubeFn& mu, const PartialBoolFn& f, long n,
                     const Rational& eps, const Rational& eps2);

struct CorrectionSpec {
  Rational alpha;
  bool zero_correction = false;
  std::optional<UnivariatePoly> p;
  HelperReport helper_report;
  std::vector<Rational> factor;  // factor[c] = alpha^c * P(c), c = 0..n
};

struct ECResult {
  CorrectionSpec spec;
  CubeFn psi_corr;  // dense; error_correct is the small-arity entry point
  std::vector<std::pair<std::string, bool>> report;  // the three conditions
  bool all_pass = false;
};

// Options: the alpha precondition can be downgraded to post-hoc checking,
// and the stock interpolant can be swapped for a caller-supplied one.
struct ECOptions {
  bool override_alpha = false;
  std::optional<UnivariatePoly> custom_p;
};

ECResult error_correct(const CubeFn& phi, const std::vector<uint8_t>& in_a,
                       long n, const Rational& eps, const ECOptions& opt = {});

struct AmplifyBundle {
  PartialBoolFn f;
  CubeFn mu;
  int d = 0;  // verified pure high degree of mu
  Rational eps2;
  long n = 0;
  Rational eps;
  AmplifyMode mode = AmplifyMode::GapMaj;
  MuParts parts;
  CorrectionSpec corr_plus, corr_minus;
  long claimed_phd = 0;       // min(d, n - deg(P) - 1), constructed degrees only
  Rational formula_n;         // the (1-(1+10/a) eps) n - 4 value, for comparison
  Rational a_construction;    // 1/alpha actually used (0 marks "no correction")
  Rational a_margin;         // 2 eps2 / (1 - 2 eps2)
  std::optional<CubeFn> psi_plus, psi_minus, psi_corr_plus, psi_corr_minus, psi;

  int composed_arity() const { return int(n) * f.arity; }
};

AmplifyBundle upp_witness(const CubeFn& mu, const PartialBoolFn& f, long n,
                          const Rational& eps, AmplifyMode mode,
                          const Rational& eps2, const ECOptions& opt = {});

struct ThresholdUpperReport {
  int formal_degree = 0;      // 2 deg(p) or deg(p) before multilinear collapse
  int multilinear_degree = 0;
  bool sign_ok = false;
  long ones_checked = 0, zeros_checked = 0;
  Rational min_on_ones, max_on_zeros;
};

std::pair<MultilinearPoly, ThresholdUpperReport> threshold_upper(
    const MultilinearPoly& p, const PartialBoolFn& f, long m, AmplifyMode mode);

}  // namespace dualdeg
