#pragma once

#include <string_view>

#include "latforge/basis.hpp"

namespace latforge {

// The Lovasz parameter alpha, an exact rational in (1/4, 1).
class LllParams {
 public:
  LllParams() : alpha_(99, 100) {}
  // Throws LatticeError(kBadParams) unless 1/4 < alpha < 1.
  explicit LllParams(Rational alpha);

  const Rational& alpha() const noexcept { return alpha_; }

 private:
  Rational alpha_;
};

// Parses "3/4", "0.9999" or "1" into an exact rational.
Rational parse_rational(std::string_view text);

// Classic swap-based LLL over exact integers: Gram-Schmidt data is carried as
// the integral numerators d_i (Gram determinants) and lambda_ij = d_j mu_ij,
// so every test is exact. Deterministic for a fixed row order; a reduced
// input comes back unchanged.
//
// Throws LatticeError(kDependentRows) if the rows turn out to be dependent.
Basis lll_reduce(const Basis& b, const LllParams& params);

// Size reduction (|mu_ij| <= 1/2) and the Lovasz condition, checked on the
// exact rational Gram-Schmidt data.
bool is_lll_reduced(const Basis& b, const LllParams& params);

}  // namespace latforge
