#pragma once

#include <gmpxx.h>

#include <vector>

#include "latforge/basis.hpp"

namespace latforge::testing {

inline Basis make_basis(std::vector<std::vector<long>> rows) {
  std::vector<Row> out;
  for (const auto& r : rows) {
    Row row;
    for (long x : r) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return Basis(std::move(out), Basis::unchecked);
}

// Solves x * B = v over the rationals by Gaussian elimination on B^T; returns
// false if v is outside the rational span of the rows.
inline bool rational_coordinates(const Basis& b, const Row& v,
                                 std::vector<mpq_class>& x) {
  const std::size_t m = b.rank(), n = b.dim();
  // Augmented n x (m+1) system: sum_i x_i b[i][k] = v[k].
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(m + 1));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < m; ++i) a[k][i] = b[i][k];
    a[k][m] = v[k];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= m; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i) {
    if (a[i][m] != 0) return false;
  }
  x.assign(m, 0);
  for (std::size_t i = 0; i < r; ++i) {
    x[pivot_col[i]] = a[i][m] / a[i][pivot_col[i]];
  }
  return true;
}

// Lattice equality without Hermite normal forms: every row of each basis has
// integral coordinates in the other.
inline bool contains_all_rows(const Basis& outer, const Basis& inner) {
  std::vector<mpq_class> x;
  for (const auto& row : inner.rows()) {
    if (!rational_coordinates(outer, row, x)) return false;
    for (auto& q : x) {
      q.canonicalize();
      if (q.get_den() != 1) return false;
    }
  }
  return true;
}

inline bool same_lattice_by_coordinates(const Basis& a, const Basis& b) {
  return a.rank() == b.rank() && contains_all_rows(a, b) &&
         contains_all_rows(b, a);
}

}  // namespace latforge::testing
