#include "latforge/hillclimb.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <string>

#include "latforge/error.hpp"
#include "latforge/parallel.hpp"

namespace latforge {

namespace {

using Clock = std::chrono::steady_clock;

// Draws candidate j of step i from its own derived stream.
using Sampler = std::function<Permutation(std::size_t step, Rng& rng)>;
using RadiusAt = std::function<std::size_t(std::size_t step)>;

struct Candidate {
  Basis basis = Basis::identity(1);
  Permutation perm = Permutation::identity(0);
  ReductionKey key;
};

HcTrace climb(const Basis& b0, const HcConfig& cfg, const Sampler& sample) {
  if (cfg.sample_size < 1 || cfg.max_steps < 1) {
    throw LatticeError(ErrorCode::kBadParams,
                       "sample size and step budget must be >= 1");
  }
  const auto start = Clock::now();
  auto seconds = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  const Real det = metrics(b0).det_lattice;
  HcTrace trace;
  trace.target_bound =
      cfg.target_bound ? *cfg.target_bound : default_target_bound(b0);

  Basis current = lll_reduce(b0, cfg.alpha);
  trace.initial_metrics = metrics(current, det);
  trace.best_basis = current;
  trace.best_metrics = trace.initial_metrics;
  Integer best_sq = shortest_squared(current);

  for (std::size_t step = 1; step <= cfg.max_steps; ++step) {
    std::vector<Candidate> candidates(cfg.sample_size);
    parallel_for(cfg.sample_size, [&](std::size_t j) {
      Rng rng = make_rng(cfg.seed, {step, j});
      Candidate& c = candidates[j];
      c.perm = sample(step, rng);
      c.basis = lll_reduce(apply(current, c.perm), cfg.alpha);
      c.key = reduction_key(c.basis);
    });
    std::size_t pick = 0;
    for (std::size_t j = 1; j < candidates.size(); ++j) {
      if (candidates[j].key < candidates[pick].key) pick = j;
    }
    // The update is unconditional; the global best is tracked separately.
    Candidate& chosen = candidates[pick];
    current = std::move(chosen.basis);

    HcStep record;
    record.index = step;
    record.radius = radius(chosen.perm).radius;
    record.chosen = std::move(chosen.perm);
    record.metrics = metrics(current, det);
    if (chosen.key.shortest_sq < best_sq) {
      best_sq = chosen.key.shortest_sq;
      trace.best_basis = current;
      trace.best_metrics = record.metrics;
      trace.seconds_to_best = seconds();
      record.improved = true;
    }
    record.best_shortest = trace.best_metrics.shortest;
    record.elapsed_seconds = seconds();
    trace.steps.push_back(std::move(record));

    if (trace.best_metrics.shortest <= trace.target_bound) {
      trace.stopped_by_target = true;
      break;
    }
  }
  trace.final_basis = std::move(current);
  trace.target_met = trace.best_metrics.shortest <= trace.target_bound;
  trace.total_seconds = seconds();
  return trace;
}

}  // namespace

Real default_target_bound(const Basis& b) {
  const Real m = static_cast<Real>(b.rank());
  return m * std::pow(static_cast<Real>(10), log10_lattice_det(b) / m);
}

std::size_t variable_radius_at(const VariableRadius& kind, std::size_t m,
                               std::size_t step) {
  const std::size_t r = kind.r0 + (step - 1) * kind.rstep;
  return r < m ? r : m;
}

HcTrace hc_fixed(const Basis& b0, const HcConfig& cfg) {
  const auto* kind = std::get_if<FixedRadius>(&cfg.kind);
  if (kind == nullptr) {
    throw LatticeError(ErrorCode::kBadParams, "hc_fixed needs a fixed radius");
  }
  const std::size_t m = b0.rank();
  const std::size_t r = kind->radius;
  check_radius(m, r);
  return climb(b0, cfg, [m, r](std::size_t, Rng& rng) {
    return sample_at_radius(m, r, rng);
  });
}

HcTrace hc_variable(const Basis& b0, const HcConfig& cfg) {
  const auto* kind = std::get_if<VariableRadius>(&cfg.kind);
  if (kind == nullptr) {
    throw LatticeError(ErrorCode::kBadParams,
                       "hc_variable needs a variable radius schedule");
  }
  const std::size_t m = b0.rank();
  check_radius(m, kind->r0);
  if (side_of(kind->r0, m) != Side::kRight) {
    throw LatticeError(ErrorCode::kInfeasibleRadius,
                       "starting radius " + std::to_string(kind->r0) +
                           " is not a right radius for degree " +
                           std::to_string(m));
  }
  if (kind->rstep < 1) {
    throw LatticeError(ErrorCode::kBadParams, "rstep must be >= 1");
  }
  const VariableRadius schedule = *kind;
  return climb(b0, cfg, [m, schedule](std::size_t step, Rng& rng) {
    return sample_at_radius(m, variable_radius_at(schedule, m, step), rng);
  });
}

HcTrace hc_psl2(const Basis& b0, const HcConfig& cfg) {
  const auto* kind = std::get_if<Psl2>(&cfg.kind);
  if (kind == nullptr) {
    throw LatticeError(ErrorCode::kBadParams, "hc_psl2 needs a prime");
  }
  const unsigned long p = kind->p;
  if (!is_prime(p)) {
    throw LatticeError(ErrorCode::kNotPrime, std::to_string(p) +
                                                 " is not prime");
  }
  if (b0.rank() != p + 1) {
    throw LatticeError(ErrorCode::kDegreeMismatch,
                       "PSL(2," + std::to_string(p) + ") acts on " +
                           std::to_string(p + 1) + " points, basis rank is " +
                           std::to_string(b0.rank()));
  }
  return climb(b0, cfg, [p](std::size_t, Rng& rng) {
    return psl2_permutations(p, 1, rng).front();
  });
}

HcTrace hill_climb(const Basis& b0, const HcConfig& cfg) {
  return std::visit(
      [&](const auto& kind) {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, FixedRadius>) {
          return hc_fixed(b0, cfg);
        } else if constexpr (std::is_same_v<K, VariableRadius>) {
          return hc_variable(b0, cfg);
        } else {
          return hc_psl2(b0, cfg);
        }
      },
      cfg.kind);
}

}  // namespace latforge
