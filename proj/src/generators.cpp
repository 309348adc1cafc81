#include "latforge/generators.hpp"

#include <random>

#include "latforge/error.hpp"

namespace latforge {

Integer random_bits(std::size_t bits, Rng& rng) {
  Integer out = 0;
  std::size_t have = 0;
  while (have < bits) {
    const std::size_t take = std::min<std::size_t>(64, bits - have);
    std::uint64_t word = rng();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    Integer chunk;
    mpz_import(chunk.get_mpz_t(), 1, -1, sizeof word, 0, 0, &word);
    out <<= take;
    out += chunk;
    have += take;
  }
  return out;
}

Integer random_digits(std::size_t digits, Rng& rng) {
  if (digits == 0) return 0;
  std::uniform_int_distribution<int> lead(1, 9), any(0, 9);
  std::string s(1, static_cast<char>('0' + lead(rng)));
  for (std::size_t i = 1; i < digits; ++i) {
    s += static_cast<char>('0' + any(rng));
  }
  return Integer(s);
}

namespace {

template <typename Weight>
Basis knapsack(std::size_t m, Weight&& weight) {
  if (m < 1) throw LatticeError(ErrorCode::kBadParams, "rank must be >= 1");
  std::vector<Row> rows(m, Row(m + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    rows[i][i] = 1;
    rows[i][m] = weight();
  }
  // The identity block makes the rows independent.
  return Basis(std::move(rows), Basis::unchecked);
}

}  // namespace

Basis knapsack_lattice(std::size_t m, std::size_t bits, Rng& rng) {
  return knapsack(m, [&] { return random_bits(bits, rng); });
}

Basis knapsack_lattice_digits(std::size_t m, std::size_t digits, Rng& rng) {
  return knapsack(m, [&] { return random_digits(digits, rng); });
}

Basis random_basis(std::size_t m, std::size_t n, long lo, long hi, Rng& rng) {
  if (m < 1 || m > n || lo > hi) {
    throw LatticeError(ErrorCode::kBadParams, "bad random basis shape");
  }
  std::uniform_int_distribution<long> entry(lo, hi);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Row> rows(m, Row(n));
    for (auto& row : rows) {
      for (auto& x : row) x = entry(rng);
    }
    if (matrix_rank(rows) == m) return Basis(std::move(rows), Basis::unchecked);
  }
  throw LatticeError(ErrorCode::kBadParams,
                     "entry range too narrow for independent rows");
}

}  // namespace latforge
