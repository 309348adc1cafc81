#include "latforge/hnf.hpp"

#include <utility>

namespace latforge {

namespace {

// row_i -= q * row_k, over the columns from `from` onward.
void sub_multiple(Row& target, const Row& source, const Integer& q,
                  std::size_t from) {
  for (std::size_t j = from; j < target.size(); ++j) {
    mpz_submul(target[j].get_mpz_t(), q.get_mpz_t(), source[j].get_mpz_t());
  }
}

}  // namespace

Basis hnf(const Basis& b) {
  std::vector<Row> rows = b.rows();
  const std::size_t m = rows.size();
  const std::size_t n = b.dim();
  std::size_t r = 0;
  Integer q;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    // Euclid across all remaining rows at once: keep the smallest nonzero
    // entry as pivot, reduce the others modulo it, repeat until the pivot is
    // the only nonzero entry in this column.
    while (true) {
      std::size_t pivot = m;
      for (std::size_t i = r; i < m; ++i) {
        if (rows[i][col] != 0 &&
            (pivot == m || cmp_abs(rows[i][col], rows[pivot][col]) < 0)) {
          pivot = i;
        }
      }
      if (pivot == m) break;
      std::swap(rows[r], rows[pivot]);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                   rows[r][col].get_mpz_t());
        sub_multiple(rows[i], rows[r], q, col);
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0) {
      for (std::size_t j = col; j < n; ++j) rows[r][j] = -rows[r][j];
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                 rows[r][col].get_mpz_t());
      if (q != 0) sub_multiple(rows[i], rows[r], q, col);
    }
    ++r;
  }
  return Basis(std::move(rows), Basis::unchecked);
}

bool same_lattice(const Basis& a, const Basis& b) {
  if (a.rank() != b.rank() || a.dim() != b.dim()) return false;
  return hnf(a) == hnf(b);
}

}  // namespace latforge
