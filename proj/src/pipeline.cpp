#include "latforge/pipeline.hpp"

#include <chrono>
#include <string>

#include "latforge/error.hpp"
#include "latforge/ldsf.hpp"
#include "latforge/random.hpp"

namespace latforge {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

LdsfConfig ldsf_config(const StageSpec& spec, std::size_t blocks,
                       std::uint64_t seed) {
  LdsfConfig cfg;
  cfg.servers = blocks;
  cfg.block_rows = 0;
  cfg.inner_iters = spec.inner_iters.value_or(kDefaultInnerIters);
  cfg.outer_iters = spec.outer_iters.value_or(kDefaultOuterIters);
  cfg.alpha = spec.alpha;
  cfg.target_bound = spec.target_bound;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

std::string stage_name(const StageKind& kind) {
  return std::visit(Overloaded{[](const LdsfStage&) { return "ldsf"; },
                               [](const SigmaStage&) { return "sigma"; },
                               [](const LllStage&) { return "lll"; }},
                    kind);
}

PipelineReport run_pipeline(const Basis& b0,
                            const std::vector<StageSpec>& stages,
                            std::uint64_t seed) {
  if (stages.empty()) {
    throw LatticeError(ErrorCode::kBadStageParams, "no stages");
  }
  const std::size_t m = b0.rank();
  for (std::size_t s = 0; s < stages.size(); ++s) {
    std::size_t blocks = 1;
    if (const auto* l = std::get_if<LdsfStage>(&stages[s].kind)) blocks = l->blocks;
    if (const auto* g = std::get_if<SigmaStage>(&stages[s].kind)) {
      blocks = g->blocks;
      if (g->samples < 1) {
        throw LatticeError(ErrorCode::kBadStageParams,
                           "stage " + std::to_string(s + 1) +
                               ": sample size must be >= 1");
      }
    }
    if (blocks < 1 || blocks > m) {
      throw LatticeError(ErrorCode::kStageInfeasible,
                         "stage " + std::to_string(s + 1) + " asks for " +
                             std::to_string(blocks) + " blocks on rank " +
                             std::to_string(m));
    }
  }

  using Clock = std::chrono::steady_clock;
  const Real det = metrics(b0).det_lattice;
  PipelineReport report;
  Basis current = b0;
  for (std::size_t s = 0; s < stages.size(); ++s) {
    const StageSpec& spec = stages[s];
    const std::uint64_t stage_seed = derive_seed(seed, {s});
    const auto start = Clock::now();
    StageReport r;
    r.index = s + 1;
    r.kind = stage_name(spec.kind);
    r.before = metrics(current, det);

    std::visit(
        Overloaded{
            [&](const LdsfStage& stage) {
              r.blocks = stage.blocks;
              r.samples = 1;
              LdsfTrace t =
                  ldsf_run(current, ldsf_config(spec, stage.blocks, stage_seed));
              r.llb = t.best_vector_norm;
              r.lub = t.min_longest;
              current = std::move(t.best_basis);
            },
            [&](const SigmaStage& stage) {
              r.blocks = stage.blocks;
              r.samples = stage.samples;
              Rng rng = make_rng(stage_seed, {0});
              SigmaResult res =
                  sigma(stage.blocks, stage.samples, current,
                        ldsf_config(spec, stage.blocks, stage_seed), rng);
              r.llb = res.llb;
              r.lub = res.lub;
              current = std::move(res.basis);
            },
            [&](const LllStage&) {
              r.blocks = 1;
              r.samples = 1;
              current = lll_reduce(current, spec.alpha);
              const BasisMetrics after = metrics(current, det);
              r.llb = after.shortest;
              r.lub = after.longest;
            }},
        spec.kind);

    r.after = metrics(current, det);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    report.total_seconds += r.seconds;
    if (s >= 2 && r.llb > report.stages.back().llb) ++report.llb_inversions;
    report.stages.push_back(std::move(r));
  }
  report.final_basis = std::move(current);
  return report;
}

std::vector<StageSpec> default_four_stage(std::size_t m_blocks,
                                          std::size_t n_sample,
                                          std::size_t l_blocks,
                                          const LllParams& alpha) {
  if (l_blocks >= m_blocks) {
    throw LatticeError(ErrorCode::kBadStageParams,
                       "stage 3 needs fewer blocks than stage 2 (" +
                           std::to_string(l_blocks) + " >= " +
                           std::to_string(m_blocks) + ")");
  }
  if (l_blocks < 1 || n_sample < 1) {
    throw LatticeError(ErrorCode::kBadStageParams,
                       "block and sample counts must be >= 1");
  }
  std::vector<StageSpec> stages(4);
  stages[0].kind = LdsfStage{m_blocks};
  stages[1].kind = SigmaStage{m_blocks, n_sample};
  stages[2].kind = SigmaStage{l_blocks, n_sample};
  stages[3].kind = LllStage{};
  for (auto& s : stages) s.alpha = alpha;
  return stages;
}

std::vector<StageSpec> five_stage_template(const LllParams& alpha) {
  std::vector<StageSpec> stages(5);
  stages[0].kind = LdsfStage{3};
  stages[1].kind = SigmaStage{6, 10};
  stages[2].kind = SigmaStage{3, 5};
  stages[3].kind = SigmaStage{2, 5};
  stages[4].kind = SigmaStage{2, 5};
  for (auto& s : stages) s.alpha = alpha;
  return stages;
}

}  // namespace latforge
