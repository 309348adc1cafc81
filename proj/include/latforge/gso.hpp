#pragma once

#include <vector>

#include "latforge/basis.hpp"

namespace latforge {

// Exact Gram-Schmidt data of a basis.
struct GsoData {
  std::vector<std::vector<Rational>> ortho;  // b*_i
  std::vector<std::vector<Rational>> mu;     // mu[i][j] for j < i; 0 elsewhere
  std::vector<Rational> normsq;              // |b*_i|^2
};

// Throws LatticeError(kDependentRows) if some |b*_i|^2 vanishes.
GsoData gso(const Basis& b);

}  // namespace latforge
