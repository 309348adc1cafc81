#include "latforge/ldsf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "latforge/error.hpp"
#include "latforge/parallel.hpp"

namespace latforge {

std::vector<std::size_t> block_sizes(std::size_t m, std::size_t k,
                                     std::size_t beta) {
  auto fail = [&](const std::string& why) {
    return LatticeError(ErrorCode::kBadBlocking,
                        std::to_string(k) + " blocks of " +
                            std::to_string(beta) + " rows over rank " +
                            std::to_string(m) + ": " + why);
  };
  if (k < 1) throw fail("need at least one block");
  if (beta < 2) throw fail("block size must be >= 2");
  if (m < 2 * k) throw fail("some block would have fewer than 2 rows");

  std::vector<std::size_t> sizes(k, beta);
  if ((k - 1) * beta + 2 <= m) {
    sizes.back() = m - (k - 1) * beta;
    return sizes;
  }
  for (std::size_t j = 0; j < k; ++j) sizes[j] = m / k + (j >= k - m % k);
  return sizes;
}

std::vector<Basis> diffuse(const Basis& b, std::size_t k, std::size_t beta,
                           Rng& rng) {
  const auto sizes = block_sizes(b.rank(), k, beta);
  std::vector<std::size_t> order(b.rank());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Basis> blocks;
  blocks.reserve(k);
  std::size_t next = 0;
  for (std::size_t size : sizes) {
    std::vector<Row> rows;
    rows.reserve(size);
    for (std::size_t j = 0; j < size; ++j) rows.push_back(b[order[next++]]);
    blocks.emplace_back(std::move(rows), Basis::unchecked);
  }
  return blocks;
}

Basis fuse(const std::vector<Basis>& blocks, const Permutation& p) {
  std::vector<Row> rows;
  for (const auto& block : blocks) {
    rows.insert(rows.end(), block.rows().begin(), block.rows().end());
  }
  if (rows.size() != p.degree()) {
    throw LatticeError(ErrorCode::kDegreeMismatch,
                       "blocks hold " + std::to_string(rows.size()) +
                           " rows, permutation has degree " +
                           std::to_string(p.degree()));
  }
  return apply(Basis(std::move(rows), Basis::unchecked), p);
}

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

LdsfTrace ldsf_run(const Basis& b, const LdsfConfig& cfg) {
  if (cfg.inner_iters < 1 || cfg.outer_iters < 1) {
    throw LatticeError(ErrorCode::kBadParams,
                       "inner and outer iteration counts must be >= 1");
  }
  const std::size_t m = b.rank();
  std::size_t k = cfg.servers;
  std::size_t beta = cfg.block_rows != 0 ? cfg.block_rows
                                         : ceil_div(m, std::max<std::size_t>(k, 1));
  block_sizes(m, k, beta);  // reject bad blocking before any work

  const Real det = metrics(b).det_lattice;
  LdsfTrace trace;
  Basis current = b;
  Integer best_sq;
  Integer min_longest_sq;
  bool have_best = false;

  for (std::size_t l = 1; l <= cfg.outer_iters; ++l) {
    if (l > 1) {
      k = std::max<std::size_t>(1, k - 1);
      beta = ceil_div(m, k);
    }
    for (std::size_t i = 1; i <= cfg.inner_iters; ++i) {
      Rng rng = make_rng(cfg.seed, {l, i});
      std::vector<Basis> blocks = diffuse(current, k, beta, rng);
      parallel_for(blocks.size(), [&](std::size_t j) {
        blocks[j] = lll_reduce(blocks[j], cfg.alpha);
      });
      LdsfRound round;
      round.outer = l;
      round.inner = i;
      round.blocks = k;
      round.beta = beta;
      for (const auto& block : blocks) {
        round.block_metrics.push_back(metrics(block));
      }
      round.permutation = sample_right(m, rng);
      current = fuse(blocks, round.permutation);
      round.fused = metrics(current, det);

      const ReductionKey key = reduction_key(current);
      if (!have_best || key.shortest_sq < best_sq) {
        best_sq = key.shortest_sq;
        trace.best_basis = current;
        trace.best_vector_norm = round.fused.shortest;
      }
      if (!have_best || key.longest_sq < min_longest_sq) {
        min_longest_sq = key.longest_sq;
        trace.min_longest = round.fused.longest;
      }
      have_best = true;
      round.best_so_far = trace.best_vector_norm;
      if (cfg.on_round) cfg.on_round(round, current);
      trace.rounds.push_back(std::move(round));

      if (cfg.target_bound && trace.best_vector_norm <= *cfg.target_bound) {
        trace.stopped_by_target = true;
        trace.final_basis = current;
        return trace;
      }
    }
  }
  trace.final_basis = std::move(current);
  return trace;
}

SigmaResult sigma_with(const std::vector<Permutation>& perms,
                       std::size_t m_blocks, const Basis& b,
                       const LdsfConfig& cfg) {
  if (perms.empty()) {
    throw LatticeError(ErrorCode::kBadParams, "sigma needs >= 1 permutation");
  }
  SigmaResult out;
  out.permutations = perms;
  ReductionKey best_key;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    LdsfConfig inner = cfg;
    inner.servers = m_blocks;
    inner.block_rows = 0;
    inner.seed = derive_seed(cfg.seed, {i});
    LdsfTrace run = ldsf_run(apply(b, perms[i]), inner);
    out.candidates.push_back(metrics(run.best_basis));
    ReductionKey key = reduction_key(run.best_basis);
    if (i == 0 || key < best_key) {
      best_key = std::move(key);
      out.chosen = i;
      out.basis = std::move(run.best_basis);
    }
    if (i == 0 || run.best_vector_norm < out.llb) out.llb = run.best_vector_norm;
    if (i == 0 || run.min_longest < out.lub) out.lub = run.min_longest;
  }
  return out;
}

SigmaResult sigma(std::size_t m_blocks, std::size_t n_perms, const Basis& b,
                  const LdsfConfig& cfg, Rng& rng) {
  if (n_perms < 1) {
    throw LatticeError(ErrorCode::kBadParams, "sigma needs n_perms >= 1");
  }
  std::vector<Permutation> perms;
  perms.reserve(n_perms);
  for (std::size_t i = 0; i < n_perms; ++i) {
    perms.push_back(sample_right(b.rank(), rng));
  }
  return sigma_with(perms, m_blocks, b, cfg);
}

}  // namespace latforge
