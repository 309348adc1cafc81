#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace latforge {

using Integer = mpz_class;
using Rational = mpq_class;
using Row = std::vector<Integer>;

inline int cmp_abs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Integer squared_norm(std::span<const Integer> a);

// Rank of an integer matrix, by fraction-free elimination.
std::size_t matrix_rank(const std::vector<Row>& rows);

// A lattice basis: m linearly independent integer rows of length n, m <= n.
// Immutable once built; operators return new bases.
class Basis {
 public:
  struct Unchecked {};
  static constexpr Unchecked unchecked{};

  // Validates the shape and the linear independence of the rows.
  // Throws LatticeError(kInvalidBasis) on a bad shape and
  // LatticeError(kRankDeficient) on dependent rows.
  explicit Basis(std::vector<Row> rows);

  // Shape check only. For rows already known to be independent (images of a
  // valid basis under a unimodular transform) or for deliberately invalid
  // inputs in tests.
  Basis(std::vector<Row> rows, Unchecked);

  static Basis identity(std::size_t m);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return rows_.front().size(); }

  const Row& operator[](std::size_t i) const { return rows_[i]; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::vector<Row> release() && { return std::move(rows_); }

  Integer max_abs_entry() const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  std::vector<Row> rows_;
};

}  // namespace latforge
