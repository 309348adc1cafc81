#include "latforge/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "latforge/error.hpp"
#include "latforge/parallel.hpp"
#include "latforge/perm.hpp"
#include "latforge/random.hpp"

namespace latforge {

std::string format_real(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", x);
  return buf;
}

SweepRow summarize(std::size_t radius, std::span<const Real> values) {
  if (values.empty()) {
    throw LatticeError(ErrorCode::kBadParams, "no samples to summarize");
  }
  SweepRow row;
  row.radius = radius;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  row.min = *lo;
  row.max = *hi;
  Real sum = 0;
  for (Real v : values) sum += v;
  row.mean = sum / static_cast<Real>(values.size());
  Real ss = 0;
  for (Real v : values) ss += (v - row.mean) * (v - row.mean);
  row.std = std::sqrt(ss / static_cast<Real>(values.size()));
  row.range = row.max - row.min;
  // Rounding can push the mean a hair outside [min, max] on constant data.
  row.mean = std::clamp(row.mean, row.min, row.max);
  return row;
}

namespace {

// LLL over n_samples permutations of radius r, one derived stream each.
std::vector<BasisMetrics> permuted_reductions(const Basis& b, std::size_t r,
                                              std::size_t n_samples,
                                              const LllParams& alpha,
                                              std::uint64_t seed, Real det) {
  check_radius(b.rank(), r);
  std::vector<BasisMetrics> out(n_samples);
  parallel_for(n_samples, [&](std::size_t j) {
    Rng rng = make_rng(seed, {r, j});
    const Permutation p = sample_at_radius(b.rank(), r, rng);
    out[j] = metrics(lll_reduce(apply(b, p), alpha), det);
  });
  return out;
}

}  // namespace

SweepResult radius_sweep(const Basis& b, const std::vector<std::size_t>& radii,
                         std::size_t n_samples, const LllParams& alpha,
                         std::uint64_t seed) {
  if (n_samples < 1) {
    throw LatticeError(ErrorCode::kBadParams, "need at least one sample");
  }
  for (std::size_t r : radii) check_radius(b.rank(), r);
  const Real det = metrics(b).det_lattice;
  SweepResult out;
  for (std::size_t r : radii) {
    const auto runs = permuted_reductions(b, r, n_samples, alpha, seed, det);
    std::vector<Real> lengths;
    lengths.reserve(runs.size());
    for (const auto& m : runs) lengths.push_back(m.shortest);
    out.rows.push_back(summarize(r, lengths));
  }
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = "radius,min,max,mean,std,range\n";
  for (const auto& row : sweep.rows) {
    out += std::to_string(row.radius) + ',' + format_real(row.min) + ',' +
           format_real(row.max) + ',' + format_real(row.mean) + ',' +
           format_real(row.std) + ',' + format_real(row.range) + '\n';
  }
  return out;
}

std::vector<RadiusProfile> radius_profile(const Basis& b_star,
                                          const std::vector<std::size_t>& radii,
                                          std::size_t n_samples,
                                          const LllParams& alpha,
                                          std::uint64_t seed) {
  if (n_samples < 1) {
    throw LatticeError(ErrorCode::kBadParams, "need at least one sample");
  }
  for (std::size_t r : radii) check_radius(b_star.rank(), r);
  const BasisMetrics base = metrics(b_star);
  const Integer base_sq = shortest_squared(b_star);
  std::vector<RadiusProfile> out;
  for (std::size_t r : radii) {
    std::vector<std::size_t> improved(n_samples, 0);
    std::vector<BasisMetrics> runs(n_samples);
    parallel_for(n_samples, [&](std::size_t j) {
      Rng rng = make_rng(seed, {r, j});
      const Permutation p = sample_at_radius(b_star.rank(), r, rng);
      const Basis reduced = lll_reduce(apply(b_star, p), alpha);
      runs[j] = metrics(reduced, base.det_lattice);
      improved[j] = shortest_squared(reduced) < base_sq;
    });
    RadiusProfile row;
    row.radius = r;
    std::vector<Real> shortest, longest, weight;
    std::size_t hits = 0;
    for (std::size_t j = 0; j < n_samples; ++j) {
      hits += improved[j];
      shortest.push_back(runs[j].shortest);
      longest.push_back(runs[j].longest);
      weight.push_back(runs[j].log10_weight);
    }
    const SweepRow s = summarize(r, shortest);
    const SweepRow l = summarize(r, longest);
    const SweepRow w = summarize(r, weight);
    row.llb = s.min;
    row.lub = l.min;
    row.mwt = w.min;
    row.mean_shortest = s.mean;
    row.mean_longest = l.mean;
    row.mean_log10_weight = w.mean;
    const Real n = static_cast<Real>(n_samples);
    row.frequency = static_cast<Real>(hits) / n;
    out.push_back(row);
  }
  return out;
}

std::vector<Real> improvement_frequency(const Basis& b_star,
                                        const std::vector<std::size_t>& radii,
                                        std::size_t n_samples,
                                        const LllParams& alpha,
                                        std::uint64_t seed) {
  std::vector<Real> out;
  for (const auto& row : radius_profile(b_star, radii, n_samples, alpha, seed)) {
    out.push_back(row.frequency);
  }
  return out;
}

std::vector<Real> normalize(std::span<const Real> values) {
  if (values.empty()) {
    throw LatticeError(ErrorCode::kBadParams, "nothing to normalize");
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const Real span = *hi - *lo;
  std::vector<Real> out;
  out.reserve(values.size());
  for (Real v : values) out.push_back(span == 0 ? 0 : (v - *lo) / span);
  return out;
}

std::string profile_csv(const std::vector<RadiusProfile>& profile) {
  std::vector<Real> l, big_l, wt;
  for (const auto& row : profile) {
    l.push_back(row.mean_shortest);
    big_l.push_back(row.mean_longest);
    wt.push_back(row.mean_log10_weight);
  }
  std::vector<Real> nl, nL, nw;
  if (!profile.empty()) {
    nl = normalize(l);
    nL = normalize(big_l);
    nw = normalize(wt);
  }
  std::string out =
      "radius,frequency,llb,lub,mwt,mean_shortest,mean_longest,"
      "mean_log10_weight,norm_mean_shortest,norm_mean_longest,"
      "norm_mean_log10_weight\n";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto& row = profile[i];
    out += std::to_string(row.radius) + ',' + format_real(row.frequency) + ',' +
           format_real(row.llb) + ',' + format_real(row.lub) + ',' +
           format_real(row.mwt) + ',' + format_real(row.mean_shortest) + ',' +
           format_real(row.mean_longest) + ',' +
           format_real(row.mean_log10_weight) + ',' + format_real(nl[i]) +
           ',' + format_real(nL[i]) + ',' + format_real(nw[i]) + '\n';
  }
  return out;
}

}  // namespace latforge
