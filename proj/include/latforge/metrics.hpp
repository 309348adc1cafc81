#pragma once

#include "latforge/basis.hpp"

namespace latforge {

// At least 64 bits of mantissa on x86-64, and an exponent range wide enough
// for norms of bases with ~1000-digit entries.
using Real = long double;

Real to_real(const Integer& x);
Real log10_of(const Integer& x);  // x > 0
Real sqrt_of(const Integer& x);   // x >= 0

struct BasisMetrics {
  Real shortest = 0;      // l: smallest row norm
  Real longest = 0;       // L: largest row norm
  Real log10_weight = 0;  // log10 of the product of the row norms
  Real det_lattice = 0;   // sqrt(det(B B^T))
};

// det(B B^T), exact.
Integer gram_det(const Basis& b);
Real log10_lattice_det(const Basis& b);

BasisMetrics metrics(const Basis& b);
// Row-norm metrics only; det_lattice is a lattice invariant the caller
// already knows.
BasisMetrics metrics(const Basis& b, Real det_lattice);

// Ordering used to pick "the best reduction" among candidate bases:
// ascending by (shortest, log10_weight, longest). Squared norms stay exact so
// ties on length are detected exactly.
struct ReductionKey {
  Integer shortest_sq;
  Real log10_weight = 0;
  Integer longest_sq;

  friend bool operator<(const ReductionKey& a, const ReductionKey& b);
};

ReductionKey reduction_key(const Basis& b);

// Smallest squared row norm.
Integer shortest_squared(const Basis& b);

}  // namespace latforge
