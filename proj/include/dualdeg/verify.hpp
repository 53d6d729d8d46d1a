#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualdeg/boolfn.hpp"
#include "dualdeg/polylib.hpp"

namespace dualdeg {

struct AmplifyBundle;  // amplify.hpp

enum class WitnessKind { ApproxDual, ThresholdDual, OneSidedDual };

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string value;  // exact value backing the check, for reports
};

struct WitnessReport {
  WitnessKind kind = WitnessKind::ApproxDual;
  std::vector<CheckItem> checks;
  bool verdict = false;
  int verified_phd = -2;  // exact when phd_exact, else a checked lower bound
  bool phd_exact = false;

  const CheckItem* find(const std::string& name) const;
};

// Every defining condition of the witness kind, checked with exact
// arithmetic over the whole cube. Strict inequalities stay strict: ties fail.
WitnessReport verify_dual(const CubeFn& psi, const PartialBoolFn& f,
                          WitnessKind kind, int d,
                          std::optional<Rational> eps);

// The three error-correction conditions, exhaustively. Condition 3 is
// reported both against the closed formula and against n - deg(P) - 1.
WitnessReport verify_error_correction(const CubeFn& psi_corr, const CubeFn& phi,
                                      const std::vector<uint8_t>& in_a, long n,
                                      const Rational& eps,
                                      std::optional<int> deg_p);

struct Certificate {
  bool accepted = false;
  std::string failing;     // first failing condition when rejected
  long phd_bound = 0;      // verified pure high degree lower bound of psi
  long deg_pm_exceeds = 0; // certified: threshold degree > this
  long upp_dt_exceeds = 0; // and UPP^dt equals threshold degree
  std::vector<CheckItem> checks;
};

// Full sweep of the composed cube: support, sign agreement, the two
// half-bounds, non-triviality, and the claimed pure high degree.
Certificate certify_amplification(const AmplifyBundle& bundle);

}  // namespace dualdeg
