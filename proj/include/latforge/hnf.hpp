#pragma once

#include "latforge/basis.hpp"

namespace latforge {

// Row-style Hermite normal form: row echelon profile with positive pivots and
// every entry above a pivot reduced into [0, pivot). Two bases generate the
// same lattice iff their HNFs are identical.
Basis hnf(const Basis& b);

bool same_lattice(const Basis& a, const Basis& b);

}  // namespace latforge
