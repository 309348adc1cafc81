#include "latforge/basis.hpp"

#include <string>
#include <utility>

#include "latforge/error.hpp"

namespace latforge {

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  }
  return acc;
}

Integer squared_norm(std::span<const Integer> a) { return dot(a, a); }

std::size_t matrix_rank(const std::vector<Row>& rows) {
  if (rows.empty()) return 0;
  std::vector<Row> work = rows;
  const std::size_t m = work.size();
  const std::size_t n = work.front().size();
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && work[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(work[pivot], work[rank]);
    // Bareiss step: every division below is exact.
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        Integer v = work[rank][col] * work[i][j] - work[i][col] * work[rank][j];
        mpz_divexact(work[i][j].get_mpz_t(), v.get_mpz_t(),
                     prev_pivot.get_mpz_t());
      }
      work[i][col] = 0;
    }
    prev_pivot = work[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

void check_shape(const std::vector<Row>& rows) {
  if (rows.empty()) {
    throw LatticeError(ErrorCode::kInvalidBasis, "basis has no rows");
  }
  const std::size_t n = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      throw LatticeError(ErrorCode::kInvalidBasis,
                         "row " + std::to_string(i + 1) + " has length " +
                             std::to_string(rows[i].size()) + ", expected " +
                             std::to_string(n));
    }
  }
  if (rows.size() > n) {
    throw LatticeError(ErrorCode::kInvalidBasis,
                       "rank " + std::to_string(rows.size()) +
                           " exceeds dimension " + std::to_string(n));
  }
}

}  // namespace

Basis::Basis(std::vector<Row> rows) : rows_(std::move(rows)) {
  check_shape(rows_);
  const std::size_t r = matrix_rank(rows_);
  if (r != rows_.size()) {
    throw LatticeError(ErrorCode::kRankDeficient,
                       "rows span a space of dimension " + std::to_string(r) +
                           ", expected " + std::to_string(rows_.size()));
  }
}

Basis::Basis(std::vector<Row> rows, Unchecked) : rows_(std::move(rows)) {
  check_shape(rows_);
}

Basis Basis::identity(std::size_t m) {
  std::vector<Row> rows(m, Row(m, 0));
  for (std::size_t i = 0; i < m; ++i) rows[i][i] = 1;
  return Basis(std::move(rows), unchecked);
}

Integer Basis::max_abs_entry() const {
  Integer best = 0;
  for (const auto& row : rows_) {
    for (const auto& x : row) {
      if (cmp_abs(x, best) > 0) best = abs(x);
    }
  }
  return best;
}

}  // namespace latforge
