#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latforge/basis.hpp"
#include "latforge/lll.hpp"
#include "latforge/metrics.hpp"

namespace latforge {

struct LdsfStage {
  std::size_t blocks = 2;
};

struct SigmaStage {
  std::size_t blocks = 2;
  std::size_t samples = 1;
};

struct LllStage {};

using StageKind = std::variant<LdsfStage, SigmaStage, LllStage>;

struct StageSpec {
  StageKind kind = LllStage{};
  LllParams alpha;
  std::optional<Real> target_bound;
  std::optional<std::size_t> inner_iters;  // M, default kDefaultInnerIters
  std::optional<std::size_t> outer_iters;  // N, default kDefaultOuterIters
};

inline constexpr std::size_t kDefaultInnerIters = 2;
inline constexpr std::size_t kDefaultOuterIters = 1;

std::string stage_name(const StageKind& kind);

struct StageReport {
  std::size_t index = 0;  // 1-based
  std::string kind;
  std::size_t blocks = 0;
  std::size_t samples = 0;
  BasisMetrics before;
  BasisMetrics after;
  double seconds = 0;
  Real llb = 0;  // shortest vector length reached within the stage
  Real lub = 0;  // smallest longest-vector length within the stage
};

struct PipelineReport {
  std::vector<StageReport> stages;
  Basis final_basis = Basis::identity(1);
  double total_seconds = 0;
  // Stage-to-stage increases of llb from stage 2 onward.
  std::size_t llb_inversions = 0;
};

// Threads the basis through the stages in order. Stage s draws its randomness
// from derive_seed(seed, {s}). Throws kStageInfeasible when a stage asks for
// more blocks than the rank.
PipelineReport run_pipeline(const Basis& b0,
                            const std::vector<StageSpec>& stages,
                            std::uint64_t seed);

// [Ldsf(m), Sigma(m, n), Sigma(l, n), Lll]. Throws kBadStageParams unless
// l < m.
std::vector<StageSpec> default_four_stage(std::size_t m_blocks,
                                          std::size_t n_sample,
                                          std::size_t l_blocks,
                                          const LllParams& alpha);

// Five stages with blocks 3, 6, 3, 2, 2 and samples 1, 10, 5, 5, 5, the
// shape of the rank-300 reduction run.
std::vector<StageSpec> five_stage_template(const LllParams& alpha);

}  // namespace latforge
