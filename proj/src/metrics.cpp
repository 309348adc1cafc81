#include "latforge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace latforge {

namespace {

constexpr int kMantissaBits = 64;

// Splits |x| into top * 2^shift with top holding the leading 64 bits.
void split_top_bits(const Integer& x, std::uint64_t& top, long& shift) {
  mpz_class a = abs(x);
  const long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  shift = std::max(0L, bits - kMantissaBits);
  if (shift > 0) a >>= static_cast<mp_bitcnt_t>(shift);
  top = 0;
  // mpz_export writes the (<= 64-bit) magnitude as one little-endian word.
  std::size_t count = 0;
  mpz_export(&top, &count, -1, sizeof(top), 0, 0, a.get_mpz_t());
}

std::vector<Integer> squared_row_norms(const Basis& b) {
  std::vector<Integer> out;
  out.reserve(b.rank());
  for (const auto& row : b.rows()) out.push_back(squared_norm(row));
  return out;
}

Real log10_weight_from(const std::vector<Integer>& norms_sq) {
  std::vector<Real> logs;
  logs.reserve(norms_sq.size());
  for (const auto& s : norms_sq) logs.push_back(log10_of(s) / 2);
  // Summing in sorted order makes the value independent of row order.
  std::sort(logs.begin(), logs.end());
  Real total = 0;
  for (Real v : logs) total += v;
  return total;
}

}  // namespace

Real to_real(const Integer& x) {
  if (x == 0) return 0;
  std::uint64_t top = 0;
  long shift = 0;
  split_top_bits(x, top, shift);
  Real v = std::ldexp(static_cast<Real>(top), static_cast<int>(shift));
  return sgn(x) < 0 ? -v : v;
}

Real log10_of(const Integer& x) {
  std::uint64_t top = 0;
  long shift = 0;
  split_top_bits(x, top, shift);
  return std::log10(static_cast<Real>(top)) +
         static_cast<Real>(shift) * std::log10(static_cast<Real>(2));
}

Real sqrt_of(const Integer& x) { return std::sqrt(to_real(x)); }

Integer gram_det(const Basis& b) {
  const std::size_t m = b.rank();
  std::vector<Row> g(m, Row(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      g[i][j] = dot(b[i], b[j]);
      g[j][i] = g[i][j];
    }
  }
  // Bareiss with row pivoting; the last pivot is the determinant.
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t p = k;
    while (p < m && g[p][k] == 0) ++p;
    if (p == m) return 0;
    if (p != k) {
      std::swap(g[p], g[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        Integer v = g[k][k] * g[i][j] - g[i][k] * g[k][j];
        mpz_divexact(g[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      g[i][k] = 0;
    }
    prev = g[k][k];
  }
  return sign * prev;
}

Real log10_lattice_det(const Basis& b) { return log10_of(gram_det(b)) / 2; }

BasisMetrics metrics(const Basis& b) {
  const Integer g = gram_det(b);
  Real det = std::sqrt(to_real(g));
  if (!std::isfinite(det)) det = std::numeric_limits<Real>::infinity();
  return metrics(b, det);
}

BasisMetrics metrics(const Basis& b, Real det_lattice) {
  const auto norms_sq = squared_row_norms(b);
  const auto [lo, hi] = std::minmax_element(
      norms_sq.begin(), norms_sq.end(),
      [](const Integer& x, const Integer& y) { return x < y; });
  BasisMetrics out;
  out.shortest = sqrt_of(*lo);
  out.longest = sqrt_of(*hi);
  out.log10_weight = log10_weight_from(norms_sq);
  out.det_lattice = det_lattice;
  return out;
}

bool operator<(const ReductionKey& a, const ReductionKey& b) {
  if (int c = cmp(a.shortest_sq, b.shortest_sq); c != 0) return c < 0;
  if (a.log10_weight != b.log10_weight) return a.log10_weight < b.log10_weight;
  return a.longest_sq < b.longest_sq;
}

ReductionKey reduction_key(const Basis& b) {
  const auto norms_sq = squared_row_norms(b);
  const auto [lo, hi] = std::minmax_element(
      norms_sq.begin(), norms_sq.end(),
      [](const Integer& x, const Integer& y) { return x < y; });
  return ReductionKey{*lo, log10_weight_from(norms_sq), *hi};
}

Integer shortest_squared(const Basis& b) {
  Integer best = squared_norm(b[0]);
  for (std::size_t i = 1; i < b.rank(); ++i) {
    Integer s = squared_norm(b[i]);
    if (s < best) best = s;
  }
  return best;
}

}  // namespace latforge
