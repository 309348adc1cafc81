#pragma once

#include <cstdint>

#include "latforge/basis.hpp"
#include "latforge/metrics.hpp"

namespace latforge {

struct SvpResult {
  Row vector;                // the shortest lattice vector found
  Row coefficients;          // its coordinates with respect to the basis
  Integer norm_sq;
  Real lambda1 = 0;          // sqrt(norm_sq)
  std::uint64_t count_checked = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 200'000'000;

// Exhaustive search over all nonzero coefficient vectors in
// [-coeff_bound, coeff_bound]^m. Ties go to the lexicographically smallest
// coefficient vector. Throws kBoxTooLarge when the box exceeds `budget`
// points and kBadParams when coeff_bound < 1.
SvpResult svp_oracle(const Basis& b, long coeff_bound,
                     std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace latforge
