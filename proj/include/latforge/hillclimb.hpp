#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "latforge/basis.hpp"
#include "latforge/lll.hpp"
#include "latforge/metrics.hpp"
#include "latforge/perm.hpp"

namespace latforge {

// Type I: every step samples permutations of one radius (spherical walk).
struct FixedRadius {
  std::size_t radius = 2;
};

// Type II: right permutations whose radius grows by `rstep` per step and is
// clamped at m (spiral walk).
struct VariableRadius {
  std::size_t r0 = 2;
  std::size_t rstep = 1;
};

// Samples are uniform elements of PSL(2,p) acting on p + 1 basis rows.
struct Psl2 {
  unsigned long p = 3;
};

using HcKind = std::variant<FixedRadius, VariableRadius, Psl2>;

struct HcConfig {
  HcKind kind = FixedRadius{};
  std::size_t sample_size = 10;  // k candidates per step
  std::size_t max_steps = 5;     // p
  LllParams alpha;
  // Stop once the best shortest vector is this short. Defaults to
  // m * det(L)^(1/m).
  std::optional<Real> target_bound;
  std::uint64_t seed = 0;
};

struct HcStep {
  std::size_t index = 0;   // 1-based hill step
  std::size_t radius = 0;  // radius of the chosen permutation
  Permutation chosen = Permutation::identity(0);
  BasisMetrics metrics;    // of the basis carried into the next step
  bool improved = false;   // the global best got strictly better
  Real best_shortest = 0;  // global best after this step
  double elapsed_seconds = 0;
};

struct HcTrace {
  BasisMetrics initial_metrics;  // of LLL(b0)
  std::vector<HcStep> steps;
  Basis best_basis = Basis::identity(1);
  BasisMetrics best_metrics;
  Basis final_basis = Basis::identity(1);
  Real target_bound = 0;
  bool target_met = false;         // best shortest <= target_bound
  bool stopped_by_target = false;  // as opposed to exhausting max_steps
  double seconds_to_best = 0;
  double total_seconds = 0;
};

// m * det(L)^(1/m).
Real default_target_bound(const Basis& b);

// Radius used at 1-based step `step` of a variable-radius walk.
std::size_t variable_radius_at(const VariableRadius& kind, std::size_t m,
                               std::size_t step);

HcTrace hc_fixed(const Basis& b0, const HcConfig& cfg);
HcTrace hc_variable(const Basis& b0, const HcConfig& cfg);
HcTrace hc_psl2(const Basis& b0, const HcConfig& cfg);

// Dispatches on cfg.kind.
HcTrace hill_climb(const Basis& b0, const HcConfig& cfg);

}  // namespace latforge
