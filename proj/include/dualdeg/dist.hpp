#pragma once

#include <string>
#include <vector>

#include "dualdeg/boolfn.hpp"
#include "dualdeg/rational.hpp"

namespace dualdeg {

constexpr unsigned kDefaultEntropyBits = 20;

// Probability mass function over a labeled finite domain; masses sum to 1.
struct Distribution {
  std::vector<std::string> labels;
  std::vector<Rational> mass;

  void validate() const;
  size_t size() const { return labels.size(); }
  static Distribution over(std::vector<std::string> labels,
                           std::vector<Rational> mass);
  static Distribution uniform(std::vector<std::string> labels);
  static Distribution point(std::vector<std::string> labels, size_t at);
};

struct DistMetrics {
  Rational tvd;
  Rational l2sq;
  Bracket entropy_p;
};
DistMetrics metrics(const Distribution& p, const Distribution& q,
                    unsigned entropy_bits = kDefaultEntropyBits);

// Two-sample collision tester acceptance probability: 1/2 + ||p-q||_2^2 / 8.
// The closed form is cross-checked against direct branch enumeration and an
// exact mismatch throws.
Rational m2_accept(const Distribution& p, const Distribution& q);

struct GColInput {
  long k = 0;    // maps are [k] -> [k]
  long to1 = 0;  // the "k-to-1" parameter of the NO side
  Rational eps;  // GapMaj threshold used for classification
  std::vector<std::vector<long>> funcs;
};

struct GColReport {
  std::vector<Rational> block_tvd;
  Rational avg_tvd;        // equals tvd(D(x), uniform); the identity is asserted
  long perm_count = 0, to1_count = 0;
  int gapmaj_value = -1;   // 1 / 0 / -1 undefined
  bool yes_bound_ok = true;  // when YES: avg <= 1 - eps
  bool no_bound_ok = true;   // when NO: avg >= eps * (1 - 1/to1)
  // classification against the uniformity promise thresholds 1/bits and
  // 1 - 1/bits, with bits = log2(m*k); -1 when in the gap
  long output_bits = 0;
  int sdu_value = -1;
};
std::pair<Distribution, GColReport> reduce_gcol_to_sdu(const GColInput& x);

struct EAReport {
  Bracket h_d;          // entropy of D(x)
  Bracket h_a;          // 50 * h_d, the tensor power is never materialized
  Rational threshold;   // 50 log2(d*k) - 25/4; d, k powers of two
  std::vector<Bracket> block_entropy;
  int classification = -1;  // 1 YES, 0 NO, -1 indeterminate at this width
};
EAReport reduce_gapmajptp_to_ea(long k, const std::vector<std::vector<long>>& funcs,
                                unsigned entropy_bits = kDefaultEntropyBits);

struct PseudoPolarizer {
  int n = 0, ell = 0;
  std::vector<Rational> joint0, joint1;  // mass over {0,1}^(n+ell), S bits low

  void validate() const;
};

struct PolarizerResult {
  std::vector<Rational> d0, d1;  // transformed masses
  Rational tvd;
};
PolarizerResult polarizer_apply(const PseudoPolarizer& pp, const Rational& alpha);

// tvd_alpha^2 <= 2^(n+ell) (alpha/beta)^(2n) tvd_beta^2, compared exactly on
// squared forms.
bool polarizer_ratio_check(const PseudoPolarizer& pp, const Rational& alpha,
                           const Rational& beta);

Distribution postselect_three(const Distribution& d0, const Distribution& d1);

}  // namespace dualdeg
