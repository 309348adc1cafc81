#include "latforge/experiments.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "latforge/generators.hpp"
#include "test_util.hpp"

namespace latforge {
namespace {

TEST(SummarizeTest, PopulationSigma) {
  const std::vector<Real> v{1, 2, 3};
  const SweepRow r = summarize(4, v);
  EXPECT_EQ(r.radius, 4u);
  EXPECT_EQ(r.min, 1);
  EXPECT_EQ(r.max, 3);
  EXPECT_EQ(r.mean, 2);
  EXPECT_NEAR(static_cast<double>(r.std), std::sqrt(2.0 / 3.0), 1e-15);
  EXPECT_EQ(r.range, 2);
}

TEST(NormalizeTest, Examples) {
  const std::vector<Real> a{2, 4, 6};
  EXPECT_EQ(normalize(a), (std::vector<Real>{0, 0.5, 1}));
  const std::vector<Real> b{5, 5, 5};
  EXPECT_EQ(normalize(b), (std::vector<Real>{0, 0, 0}));
  const std::vector<Real> c{7, -1, 3};
  EXPECT_EQ(normalize(c), (std::vector<Real>{1, 0, 0.5}));
}

TEST(RadiusSweepTest, RadiusZeroIsPlainLll) {
  Rng rng(101);
  const Basis b = random_basis(8, 8, -999, 999, rng);
  const SweepResult s = radius_sweep(b, {0}, 5, LllParams(), 1);
  ASSERT_EQ(s.rows.size(), 1u);
  const Real lll = metrics(lll_reduce(b, LllParams())).shortest;
  EXPECT_EQ(s.rows[0].min, lll);
  EXPECT_EQ(s.rows[0].max, lll);
  EXPECT_EQ(s.rows[0].std, 0);
}

TEST(RadiusSweepTest, ArithmeticIdentitiesAndCsv) {
  Rng rng(102);
  const Basis b = knapsack_lattice(14, 60, rng);
  const SweepResult s = radius_sweep(b, {2, 7, 14}, 6, LllParams(), 3);
  ASSERT_EQ(s.rows.size(), 3u);
  for (const auto& r : s.rows) {
    EXPECT_LE(r.min, r.mean);
    EXPECT_LE(r.mean, r.max);
    EXPECT_EQ(r.range, r.max - r.min);
  }
  const std::string csv = sweep_csv(s);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "radius,min,max,mean,std,range");
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(csv, sweep_csv(radius_sweep(b, {2, 7, 14}, 6, LllParams(), 3)));
}

TEST(RadiusSweepTest, PermutationsChangeTheOutcome) {
  Rng rng(105);
  const Basis b = knapsack_lattice(40, 60, rng);
  const SweepResult s = radius_sweep(b, {10, 20, 30, 39}, 20, LllParams(), 4);
  for (const auto& r : s.rows) EXPECT_GT(r.std, 0) << r.radius;
}

TEST(ImprovementFrequencyTest, IdentityNeverImproves) {
  const auto f =
      improvement_frequency(Basis::identity(6), {0, 2, 4, 6}, 10, LllParams(), 1);
  for (Real x : f) EXPECT_EQ(x, 0);
}

TEST(ImprovementFrequencyTest, RadiusZeroIsZero) {
  Rng rng(103);
  const Basis reduced =
      lll_reduce(random_basis(10, 10, -999, 999, rng), LllParams());
  const auto f = improvement_frequency(reduced, {0}, 5, LllParams(), 2);
  EXPECT_EQ(f, (std::vector<Real>{0}));
}

TEST(RadiusProfileTest, MatchesFrequency) {
  Rng rng(104);
  const Basis reduced = lll_reduce(knapsack_lattice(16, 60, rng), LllParams());
  const std::vector<std::size_t> radii{4, 12, 16};
  const auto profile = radius_profile(reduced, radii, 8, LllParams(), 9);
  const auto freq = improvement_frequency(reduced, radii, 8, LllParams(), 9);
  ASSERT_EQ(profile.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(profile[i].frequency, freq[i]);
    EXPECT_LE(profile[i].llb, profile[i].mean_shortest);
    EXPECT_LE(profile[i].lub, profile[i].mean_longest);
    EXPECT_LE(profile[i].mwt, profile[i].mean_log10_weight);
  }
  EXPECT_EQ(profile_csv(profile).substr(0, 6), "radius");
}

TEST(FormatRealTest, Decimal) {
  EXPECT_EQ(format_real(2), "2");
  EXPECT_EQ(format_real(0.5L), "0.5");
}

}  // namespace
}  // namespace latforge
