#pragma once

#include <cstddef>

#include "latforge/basis.hpp"
#include "latforge/random.hpp"

namespace latforge {

// Uniform in [0, 2^bits).
Integer random_bits(std::size_t bits, Rng& rng);
// Uniform among integers with exactly `digits` decimal digits.
Integer random_digits(std::size_t digits, Rng& rng);

// Knapsack-style lattice: row i is e_i followed by one large weight a_i, so
// the basis is m x (m+1). Weights are uniform with `bits` bits.
Basis knapsack_lattice(std::size_t m, std::size_t bits, Rng& rng);
// As above with weights of exactly `digits` decimal digits.
Basis knapsack_lattice_digits(std::size_t m, std::size_t digits, Rng& rng);

// m x n basis with entries uniform in [lo, hi]; redrawn until independent.
Basis random_basis(std::size_t m, std::size_t n, long lo, long hi, Rng& rng);

}  // namespace latforge
