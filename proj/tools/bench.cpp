// Serial vs OpenMP throughput for the cube kernels.

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "dualdeg/amplify.hpp"
#include "dualdeg/kernels.hpp"
#include "dualdeg/verify.hpp"

using namespace dualdeg;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

CubeFn random_cube(std::mt19937_64& g, int m) {
  CubeFn c(m);
  for (auto& v : c.values) {
    long num = long(g() % 7) - 3;
    v = rat(num, 1 + long(g() % 4));
  }
  return c;
}

void bench_superset(int m) {
  std::mt19937_64 g(1);
  CubeFn c = random_cube(g, m);
  auto a = c.values;
  auto t0 = Clock::now();
  superset_sum_serial(a, m);
  auto t1 = Clock::now();
  auto b = c.values;
  auto t2 = Clock::now();
  superset_sum_parallel(b, m);
  auto t3 = Clock::now();
  bool same = a == b;
  printf("superset-sum      m=%-2d    serial %7.3fs  parallel %7.3fs  x%.2f  %s\n", m,
         secs(t0, t1), secs(t2, t3), secs(t0, t1) / secs(t2, t3),
         same ? "exact-match" : "MISMATCH");
}

void bench_correlation(int m) {
  std::mt19937_64 g(2);
  CubeFn c = random_cube(g, m);
  std::vector<uint8_t> table(c.cube_size());
  for (auto& v : table) v = uint8_t(g() % 3);
  std::vector<Rational> vals{Rational(0), Rational(1)};
  auto t0 = Clock::now();
  auto a = correlation_sweep_serial(c.values, table, vals);
  auto t1 = Clock::now();
  auto b = correlation_sweep_parallel(c.values, table, vals);
  auto t2 = Clock::now();
  bool same = a.on_domain == b.on_domain && a.off_abs == b.off_abs && a.l1 == b.l1;
  printf("correlation-sweep m=%-2d    serial %7.3fs  parallel %7.3fs  x%.2f  %s\n", m,
         secs(t0, t1), secs(t1, t2), secs(t0, t1) / secs(t1, t2),
         same ? "exact-match" : "MISMATCH");
}

void bench_certify(long n) {
  auto f = make_xor(2);
  auto r = approx_degree(f, rat(49, 100));
  auto b = upp_witness(*r.dual, f, n, rat(3, 4), AmplifyMode::GapMaj, rat(49, 100));
  auto t0 = Clock::now();
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  auto c1 = certify_amplification(b);
  auto t1 = Clock::now();
  omp_set_num_threads(saved);
  auto c2 = certify_amplification(b);
  auto t2 = Clock::now();
  printf("certify-sweep     n=%-2ld    serial %7.3fs  parallel %7.3fs  x%.2f  %s\n", n,
         secs(t0, t1), secs(t1, t2), secs(t0, t1) / secs(t1, t2),
         (c1.accepted == c2.accepted) ? "verdicts-match" : "MISMATCH");
}

}  // namespace

int main() {
  printf("threads available: %d\n", omp_get_max_threads());
  bench_superset(18);
  bench_superset(20);
  bench_correlation(20);
  bench_correlation(22);
  bench_certify(10);
  bench_certify(12);
  return 0;
}
