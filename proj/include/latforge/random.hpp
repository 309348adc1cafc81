#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace latforge {

using Rng = std::mt19937_64;

// Mixes a base seed with a path of indices (step, candidate, ...) into an
// independent stream seed, so randomness never depends on task scheduling.
std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> path);

inline Rng make_rng(std::uint64_t seed,
                    std::initializer_list<std::uint64_t> path) {
  return Rng(derive_seed(seed, path));
}

}  // namespace latforge
