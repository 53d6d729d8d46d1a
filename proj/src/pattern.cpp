#include "dualdeg/pattern.hpp"

#include <fstream>

#include <omp.h>

#include "dualdeg/verify.hpp"

namespace dualdeg {

std::vector<long> SignMatrix::selector_of(long c) const {
  long per_block = N / n;
  long sel_index = c >> n;  // low n bits are the shift
  std::vector<long> digits(n);
  for (long i = 0; i < n; i++) {
    digits[i] = sel_index % per_block;
    sel_index /= per_block;
  }
  return digits;
}

uint32_t SignMatrix::shift_of(long c) const { return uint32_t(c) & ((1u << n) - 1); }

SignMatrix pattern_matrix(const PartialBoolFn& phi, long N, long n, uint64_t cap) {
  if (phi.conv != Convention::PlusMinus)
    throw InvalidParams("pattern matrix expects the +-1 convention");
  if (phi.arity != n) throw ArityError("phi arity must equal n");
  if (n < 1 || N % n != 0) throw InvalidParams("need n | N");
  long per_block = N / n;

  uint64_t rows = uint64_t(1) << N;
  uint64_t cols = uint64_t(1) << n;
  for (long i = 0; i < n; i++) {
    cols *= uint64_t(per_block);
    if (cols > (uint64_t(1) << 40)) throw TooLarge("column count overflow");
  }
  if (rows * cols > cap) throw TooLarge("pattern matrix exceeds entry cap");

  SignMatrix m;
  m.N = N;
  m.n = n;
  m.rows = long(rows);
  m.cols = long(cols);
  m.entries.resize(size_t(rows * cols));

  // Entry generation parallelizes by column; each column fixes its selector
  // positions once.
#pragma omp parallel for schedule(static)
  for (long c = 0; c < m.cols; c++) {
    std::vector<long> sel = m.selector_of(c);
    uint32_t w = m.shift_of(c);
    std::vector<long> pos(n);
    for (long i = 0; i < n; i++) pos[i] = i * per_block + sel[i];
    for (long long r = 0; r < (long long)rows; r++) {
      uint32_t u = 0;
      for (long i = 0; i < n; i++)
        if ((r >> pos[i]) & 1) u |= uint32_t(1) << i;
      u ^= w;  // XOR of masks is the +-1 product of coordinates
      Val v = phi.at(u);
      m.entries[size_t(r) * m.cols + c] =
          v == Val::Undef ? 0 : (v == Val::One ? -1 : 1);
    }
  }
  return m;
}

int8_t pattern_entry(const PartialBoolFn& phi, long N, long n, uint64_t row,
                     uint64_t col) {
  if (phi.conv != Convention::PlusMinus)
    throw InvalidParams("pattern matrix expects the +-1 convention");
  if (phi.arity != n || n < 1 || N % n != 0) throw InvalidParams("bad dimensions");
  long per_block = N / n;
  uint32_t u = uint32_t(col) & ((1u << n) - 1);  // shift
  uint64_t sel = col >> n;
  for (long i = 0; i < n; i++) {
    long pos = i * per_block + long(sel % per_block);
    sel /= per_block;
    if ((row >> pos) & 1) u ^= uint32_t(1) << i;
  }
  Val v = phi.at(u);
  return v == Val::Undef ? 0 : (v == Val::One ? -1 : 1);
}

std::pair<CubeFn, int> orthogonalizing_distribution(const CubeFn& psi,
                                                    const PartialBoolFn& h) {
  if (h.conv != Convention::PlusMinus)
    throw InvalidParams("orthogonalizing distribution expects the +-1 convention");
  auto rep = verify_dual(psi, h, WitnessKind::ThresholdDual, 0, std::nullopt);
  // mu = psi * h must be nonnegative; the sign-agreement check above
  // guarantees it, but a failed report means psi was not a witness at all.
  const CheckItem* sign = rep.find("sign_agreement");
  const CheckItem* supp = rep.find("support_in_domain");
  if (!sign->pass || !supp->pass)
    throw NotOrthogonalizing("psi * h is negative or leaks off the domain");

  CubeFn mu(psi.arity);
  Rational total(0);
  for (Point x = 0; x < psi.cube_size(); x++) {
    if (sgn(psi.at(x)) == 0) continue;
    Rational v = psi.at(x) * h.value_of(x);
    mu.at(x) = v;
    total += v;
  }
  if (sgn(total) == 0) throw NotOrthogonalizing("psi is trivial");
  for (auto& v : mu.values) v /= total;

  CubeFn muh(psi.arity);
  for (Point x = 0; x < psi.cube_size(); x++)
    if (h.in_domain(x) && sgn(mu.at(x)) != 0) muh.at(x) = mu.at(x) * h.value_of(x);
  return {std::move(mu), pure_high_degree(muh)};
}

std::vector<long> symmetrize_ptp(const std::vector<long>& fvec) {
  const long n = (long)fvec.size();
  std::vector<long> counts(n, 0);
  for (long v : fvec) {
    if (v < 1 || v > n) throw InvalidInput("value out of range");
    counts[v - 1]++;
  }
  std::sort(counts.begin(), counts.end());
  return counts;
}

SmoothnessReport smoothness_report(const CubeFn& mu, int d, const Rational& alpha) {
  SmoothnessReport rep;
  rep.total = long(mu.cube_size());
  rep.threshold_log2 = alpha * d + mu.arity;
  // mu(x) < 2^(-t) for rational t = p/q <=> mu(x)^q < 2^(-p), exactly.
  Integer p = rep.threshold_log2.get_num();
  unsigned long q = rep.threshold_log2.get_den().get_ui();
  Rational rhs(1);
  if (p >= 0)
    mpq_div_2exp(rhs.get_mpq_t(), rhs.get_mpq_t(), p.get_ui());
  else
    mpq_mul_2exp(rhs.get_mpq_t(), rhs.get_mpq_t(), Integer(-p).get_ui());
  for (Point x = 0; x < mu.cube_size(); x++) {
    const Rational& v = mu.at(x);
    if (sgn(v) < 0) throw InvalidParams("negative mass");
    if (rat_pow(v, q) < rhs) rep.below++;
  }
  rep.fraction = Rational(rep.below) / Rational(rep.total);
  return rep;
}

bool verify_sign_factorization(const SignMatrix& m,
                               const std::vector<std::vector<Rational>>& u,
                               const std::vector<std::vector<Rational>>& v) {
  if ((long)u.size() != m.rows || (long)v.size() != m.cols)
    throw ArityError("factor dimensions do not match the matrix");
  size_t rank = u.empty() ? 0 : u[0].size();
  for (const auto& row : u)
    if (row.size() != rank) throw ArityError("ragged U");
  for (const auto& row : v)
    if (row.size() != rank) throw ArityError("ragged V");

  for (long r = 0; r < m.rows; r++) {
    for (long c = 0; c < m.cols; c++) {
      int8_t want = m.at(r, c);
      if (want == 0) continue;
      Rational dot(0);
      for (size_t k = 0; k < rank; k++) dot += u[r][k] * v[c][k];
      if (sgn(dot) != int(want)) return false;
    }
  }
  return true;
}

void export_csv(const SignMatrix& m, const std::string& csv_path,
                const std::string& labels_path) {
  std::ofstream csv(csv_path);
  if (!csv) throw Error("cannot open " + csv_path);
  for (long r = 0; r < m.rows; r++) {
    for (long c = 0; c < m.cols; c++) {
      if (c) csv << ',';
      csv << int(m.at(r, c));
    }
    csv << '\n';
  }
  json labels;
  labels["N"] = m.N;
  labels["n"] = m.n;
  labels["rows"] = m.rows;
  labels["cols"] = m.cols;
  json cols = json::array();
  for (long c = 0; c < m.cols; c++) {
    json col;
    col["selector"] = m.selector_of(c);
    std::string w;
    for (long i = 0; i < m.n; i++) w += ((m.shift_of(c) >> i) & 1) ? '1' : '0';
    col["shift"] = w;
    cols.push_back(col);
  }
  labels["columns"] = cols;
  std::ofstream lab(labels_path);
  if (!lab) throw Error("cannot open " + labels_path);
  lab << labels.dump(2) << '\n';
}

}  // namespace dualdeg
