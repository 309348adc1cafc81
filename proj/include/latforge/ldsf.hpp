#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "latforge/basis.hpp"
#include "latforge/lll.hpp"
#include "latforge/metrics.hpp"
#include "latforge/perm.hpp"
#include "latforge/random.hpp"

namespace latforge {

struct LdsfRound;

struct LdsfConfig {
  std::size_t servers = 2;      // k: block count, decremented per outer pass
  std::size_t block_rows = 0;   // beta for the first outer pass; 0 = ceil(m/k)
  std::size_t inner_iters = 1;  // M
  std::size_t outer_iters = 1;  // N
  LllParams alpha;
  std::optional<Real> target_bound;  // stop once b* <= target
  std::uint64_t seed = 0;
  // Called after every round with the round record and its fused basis.
  std::function<void(const LdsfRound&, const Basis&)> on_round;
};

// Sizes of the k consecutive blocks a shuffled m-row basis is cut into:
// beta rows each with the last block absorbing the remainder, or as even a
// split as possible when that would leave the last block with fewer than two
// rows. Throws kBadBlocking when no split gives every block >= 2 rows.
std::vector<std::size_t> block_sizes(std::size_t m, std::size_t k,
                                     std::size_t beta);

// Random disjoint partition of the rows of b into blocks.
std::vector<Basis> diffuse(const Basis& b, std::size_t k, std::size_t beta,
                           Rng& rng);

// Concatenates the blocks in order, then permutes the rows by p.
Basis fuse(const std::vector<Basis>& blocks, const Permutation& p);

struct LdsfRound {
  std::size_t outer = 0;  // l, 1-based
  std::size_t inner = 0;  // i, 1-based
  std::size_t blocks = 0;
  std::size_t beta = 0;
  std::vector<BasisMetrics> block_metrics;  // after reduction
  BasisMetrics fused;
  Permutation permutation = Permutation::identity(0);
  Real best_so_far = 0;  // b* after this round
};

struct LdsfTrace {
  std::vector<LdsfRound> rounds;
  Real best_vector_norm = 0;  // b*
  Real min_longest = 0;       // smallest longest-vector length over rounds
  Basis best_basis = Basis::identity(1);  // the fused basis attaining b*
  Basis final_basis = Basis::identity(1); // the last fused basis
  bool stopped_by_target = false;
};

// Outer passes l = 1..N (k decremented each pass, floored at 1, beta
// recomputed as ceil(m/k)); inner passes i = 1..M: diffuse, reduce blocks
// concurrently, fuse under a fresh right permutation. All randomness of round
// (l, i) comes from derive_seed(seed, {l, i}).
LdsfTrace ldsf_run(const Basis& b, const LdsfConfig& cfg);

struct SigmaResult {
  Basis basis = Basis::identity(1);  // best C_i under the reduction order
  std::vector<Permutation> permutations;
  std::vector<BasisMetrics> candidates;  // metrics of each C_i
  std::size_t chosen = 0;
  Real llb = 0;  // min shortest over every fused basis of every run
  Real lub = 0;  // min longest over the same set
};

// Sigma(m_blocks, n_perms, B): C_i = LDSF with m_blocks blocks on B^{pi_i}
// for n_perms sampled right permutations; returns the best C_i.
SigmaResult sigma(std::size_t m_blocks, std::size_t n_perms, const Basis& b,
                  const LdsfConfig& cfg, Rng& rng);

// As sigma, with the permutations supplied by the caller.
SigmaResult sigma_with(const std::vector<Permutation>& perms,
                       std::size_t m_blocks, const Basis& b,
                       const LdsfConfig& cfg);

}  // namespace latforge
