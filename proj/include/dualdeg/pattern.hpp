#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dualdeg/boolfn.hpp"
#include "dualdeg/polylib.hpp"

namespace dualdeg {

constexpr uint64_t kDefaultMatrixCap = uint64_t(1) << 20;

// Sign matrix with rows indexed by x in {-1,1}^N and columns by (S, w),
// S a one-per-block selector in P(N,n), w a shift in {-1,1}^n.
struct SignMatrix {
  long N = 0, n = 0;
  long rows = 0, cols = 0;
  std::vector<int8_t> entries;  // row-major, values in {-1,0,1}

  int8_t at(long r, long c) const { return entries[size_t(r) * cols + c]; }
  // Column labels: selector digits (one per block) and shift mask.
  std::vector<long> selector_of(long c) const;
  uint32_t shift_of(long c) const;
};

SignMatrix pattern_matrix(const PartialBoolFn& phi, long N, long n,
                          uint64_t cap = kDefaultMatrixCap);

// Single entry without materializing the matrix; usable past the cap.
int8_t pattern_entry(const PartialBoolFn& phi, long N, long n, uint64_t row,
                     uint64_t col);

struct Distribution;  // dist.hpp

// mu = psi * h normalized; requires a threshold dual in the +-1 view.
// Returns the distribution (as a CubeFn with mass 1) and d = phd(mu * h).
std::pair<CubeFn, int> orthogonalizing_distribution(const CubeFn& psi,
                                                    const PartialBoolFn& h);

std::vector<long> symmetrize_ptp(const std::vector<long>& fvec);

struct SmoothnessReport {
  Rational threshold_log2;   // alpha*d + n, so the cut is 2^-threshold_log2
  long below = 0;
  long total = 0;
  Rational fraction;
};
SmoothnessReport smoothness_report(const CubeFn& mu, int d, const Rational& alpha);

bool verify_sign_factorization(const SignMatrix& m,
                               const std::vector<std::vector<Rational>>& u,
                               const std::vector<std::vector<Rational>>& v);

void export_csv(const SignMatrix& m, const std::string& csv_path,
                const std::string& labels_path);

}  // namespace dualdeg
