#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latforge/basis.hpp"
#include "latforge/lll.hpp"
#include "latforge/metrics.hpp"

namespace latforge {

struct SweepRow {
  std::size_t radius = 0;
  Real min = 0;
  Real max = 0;
  Real mean = 0;
  Real std = 0;  // population standard deviation
  Real range = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

// min, max, mean, population sigma and range of a non-empty sample.
SweepRow summarize(std::size_t radius, std::span<const Real> values);

// For every radius: LLL-reduce b^pi for n_samples permutations pi of that
// radius and summarize the shortest-vector lengths. Sample j of radius r uses
// derive_seed(seed, {r, j}).
SweepResult radius_sweep(const Basis& b, const std::vector<std::size_t>& radii,
                         std::size_t n_samples, const LllParams& alpha,
                         std::uint64_t seed);

// CSV with header radius,min,max,mean,std,range and LF line endings.
std::string sweep_csv(const SweepResult& sweep);

// Per-radius statistics of LLL over permutations of an already reduced basis.
struct RadiusProfile {
  std::size_t radius = 0;
  Real frequency = 0;  // fraction of samples with a strictly shorter vector
  Real llb = 0;        // min shortest
  Real lub = 0;        // min longest
  Real mwt = 0;        // min log10 weight
  Real mean_shortest = 0;
  Real mean_longest = 0;
  Real mean_log10_weight = 0;
};

std::vector<RadiusProfile> radius_profile(const Basis& b_star,
                                          const std::vector<std::size_t>& radii,
                                          std::size_t n_samples,
                                          const LllParams& alpha,
                                          std::uint64_t seed);

// Fraction of sampled permutations whose reduction has a strictly shorter
// shortest vector than b_star, per radius. b_star should be LLL-reduced.
std::vector<Real> improvement_frequency(const Basis& b_star,
                                        const std::vector<std::size_t>& radii,
                                        std::size_t n_samples,
                                        const LllParams& alpha,
                                        std::uint64_t seed);

// (v - min) / (max - min); every entry maps to 0 when all values are equal.
std::vector<Real> normalize(std::span<const Real> values);

// CSV of radius_profile with the three averages also normalized across radii.
std::string profile_csv(const std::vector<RadiusProfile>& profile);

// Decimal rendering used by every CSV and JSON report.
std::string format_real(Real x);

}  // namespace latforge
