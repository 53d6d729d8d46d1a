#pragma once

#include <cstdint>
#include <vector>

#include "dualdeg/rational.hpp"

namespace dualdeg {

// In-place superset-sum transform: v[S] <- sum_{x >= S} v[x] over the m-bit
// cube (2^m entries). This is the inner loop behind pure-high-degree checks.
//
// Serial reference implementations are kept alongside the OpenMP kernels;
// tests assert exact agreement and tools/bench.cpp compares their throughput.
void superset_sum_serial(std::vector<Rational>& v, int m);
void superset_sum_parallel(std::vector<Rational>& v, int m);
void superset_sum(std::vector<Rational>& v, int m);  // size-based dispatch

// Correlation pieces of a witness against a function table, in one pass:
//   on_domain  = sum over defined x of psi(x) * value(x)
//   off_abs    = sum over undefined x of |psi(x)|
//   l1         = sum |psi(x)|
// values: per-point function value encoded by the caller (exact rationals).
struct SweepSums {
  Rational on_domain, off_abs, l1;
};
SweepSums correlation_sweep_serial(const std::vector<Rational>& psi,
                                   const std::vector<uint8_t>& table,
                                   const std::vector<Rational>& val_of);
SweepSums correlation_sweep_parallel(const std::vector<Rational>& psi,
                                     const std::vector<uint8_t>& table,
                                     const std::vector<Rational>& val_of);
SweepSums correlation_sweep(const std::vector<Rational>& psi,
                            const std::vector<uint8_t>& table,
                            const std::vector<Rational>& val_of);

}  // namespace dualdeg
