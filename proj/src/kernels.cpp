#include "dualdeg/kernels.hpp"

#include <omp.h>

#include "dualdeg/boolfn.hpp"

namespace dualdeg {

void superset_sum_serial(std::vector<Rational>& v, int m) {
  const size_t n = size_t(1) << m;
  if (v.size() != n) throw ArityError("superset_sum size mismatch");
  for (int i = 0; i < m; i++) {
    const size_t bit = size_t(1) << i;
    for (size_t x = 0; x < n; x++)
      if (!(x & bit)) v[x] += v[x | bit];
  }
}

void superset_sum_parallel(std::vector<Rational>& v, int m) {
  const size_t n = size_t(1) << m;
  if (v.size() != n) throw ArityError("superset_sum size mismatch");
  for (int i = 0; i < m; i++) {
    const size_t bit = size_t(1) << i;
    const size_t low_mask = bit - 1;
    // Pairs (x, x|bit) are disjoint, one per flat index: no predicate, and
    // static chunks keep each thread on a contiguous stretch.
#pragma omp parallel for schedule(static)
    for (long long id = 0; id < (long long)(n >> 1); id++) {
      size_t x = ((size_t(id) & ~low_mask) << 1) | (size_t(id) & low_mask);
      v[x] += v[x | bit];
    }
  }
}

void superset_sum(std::vector<Rational>& v, int m) {
  // The transform is one cheap add per pair and ends up bandwidth-bound;
  // threads only pay off once the cube is very large.
  if (m >= 22)
    superset_sum_parallel(v, m);
  else
    superset_sum_serial(v, m);
}

namespace {

inline void accumulate_point(SweepSums& s, const Rational& p, uint8_t tv,
                             const std::vector<Rational>& val_of) {
  int sg = sgn(p);
  if (sg == 0) return;
  Rational ap = sg > 0 ? p : Rational(-p);
  s.l1 += ap;
  if (tv == uint8_t(Val::Undef))
    s.off_abs += ap;
  else
    s.on_domain += p * val_of[tv];
}

}  // namespace

SweepSums correlation_sweep_serial(const std::vector<Rational>& psi,
                                   const std::vector<uint8_t>& table,
                                   const std::vector<Rational>& val_of) {
  if (psi.size() != table.size()) throw ArityError("sweep size mismatch");
  SweepSums s{0, 0, 0};
  for (size_t x = 0; x < psi.size(); x++) accumulate_point(s, psi[x], table[x], val_of);
  return s;
}

SweepSums correlation_sweep_parallel(const std::vector<Rational>& psi,
                                     const std::vector<uint8_t>& table,
                                     const std::vector<Rational>& val_of) {
  if (psi.size() != table.size()) throw ArityError("sweep size mismatch");
  int nt = omp_get_max_threads();
  std::vector<SweepSums> partial(nt, SweepSums{0, 0, 0});
#pragma omp parallel
  {
    SweepSums local{0, 0, 0};
#pragma omp for schedule(static) nowait
    for (long long x = 0; x < (long long)psi.size(); x++)
      accumulate_point(local, psi[x], table[x], val_of);
    partial[omp_get_thread_num()] = local;
  }
  SweepSums s{0, 0, 0};
  for (const auto& p : partial) {
    s.on_domain += p.on_domain;
    s.off_abs += p.off_abs;
    s.l1 += p.l1;
  }
  return s;
}

SweepSums correlation_sweep(const std::vector<Rational>& psi,
                            const std::vector<uint8_t>& table,
                            const std::vector<Rational>& val_of) {
  if (psi.size() >= (size_t(1) << 14))
    return correlation_sweep_parallel(psi, table, val_of);
  return correlation_sweep_serial(psi, table, val_of);
}

}  // namespace dualdeg
