#include "latforge/lll.hpp"

#include <gtest/gtest.h>

#include "latforge/error.hpp"
#include "latforge/generators.hpp"
#include "latforge/hnf.hpp"
#include "latforge/svp.hpp"
#include "test_util.hpp"

namespace latforge {
namespace {

using testing::make_basis;
using testing::same_lattice_by_coordinates;

TEST(LllParamsTest, RangeIsOpen) {
  EXPECT_THROW(LllParams(Rational(1, 4)), LatticeError);
  EXPECT_THROW(LllParams(Rational(1)), LatticeError);
  EXPECT_NO_THROW(LllParams(Rational(9999, 10000)));
  EXPECT_EQ(LllParams().alpha(), Rational(99, 100));
}

TEST(LllParamsTest, ParseRational) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("0.9999"), Rational(9999, 10000));
  EXPECT_EQ(parse_rational("1"), Rational(1));
  EXPECT_THROW(parse_rational("abc"), LatticeError);
  EXPECT_THROW(parse_rational("1/0"), LatticeError);
}

TEST(LllTest, IdentityUnchanged) {
  const Basis id = Basis::identity(5);
  EXPECT_EQ(lll_reduce(id, LllParams()), id);
  EXPECT_TRUE(is_lll_reduced(id, LllParams()));
}

TEST(LllTest, ThreeDimensionalExampleReachesLambdaOne) {
  const Basis b = make_basis({{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}});
  const LllParams params(Rational(3, 4));
  const Basis r = lll_reduce(b, params);
  EXPECT_TRUE(is_lll_reduced(r, params));
  EXPECT_TRUE(same_lattice_by_coordinates(b, r));
  const SvpResult oracle = svp_oracle(b, 8);
  EXPECT_EQ(squared_norm(r[0]), oracle.norm_sq);
}

TEST(LllTest, SizeReductionViolationDetected) {
  EXPECT_FALSE(is_lll_reduced(make_basis({{1, 0}, {100, 1}}), LllParams()));
  // Size-reduced but failing the exchange condition.
  EXPECT_FALSE(is_lll_reduced(make_basis({{5, 0}, {0, 1}}), LllParams()));
  EXPECT_TRUE(is_lll_reduced(make_basis({{1, 0}, {0, 5}}), LllParams()));
}

TEST(LllTest, DependentRowsRaised) {
  const Basis b = make_basis({{1, 2, 3}, {2, 4, 6}});
  try {
    lll_reduce(b, LllParams());
    FAIL() << "expected DependentRows";
  } catch (const LatticeError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDependentRows);
  }
}

TEST(LllTest, ContractOnRandomBases) {
  Rng rng(31);
  for (const char* alpha : {"3/4", "9/10", "9999/10000"}) {
    const LllParams params(parse_rational(alpha));
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t m = 5 + trial % 4;
      const Basis b = random_basis(m, m + trial % 2, -999, 999, rng);
      const Basis r = lll_reduce(b, params);
      EXPECT_TRUE(is_lll_reduced(r, params)) << alpha;
      EXPECT_TRUE(same_lattice_by_coordinates(b, r));
      EXPECT_EQ(lll_reduce(r, params), r);
    }
  }
}

TEST(LllTest, IdempotentOnRankEight) {
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const Basis b = random_basis(8, 8, -999, 999, rng);
    const Basis once = lll_reduce(b, LllParams());
    EXPECT_EQ(lll_reduce(once, LllParams()), once);
  }
}

TEST(LllTest, Deterministic) {
  Rng rng(33);
  const Basis b = knapsack_lattice(15, 60, rng);
  EXPECT_EQ(lll_reduce(b, LllParams()), lll_reduce(b, LllParams()));
}

TEST(LllTest, KnapsackLatticePreserved) {
  Rng rng(34);
  const Basis b = knapsack_lattice(20, 100, rng);
  const Basis r = lll_reduce(b, LllParams());
  EXPECT_TRUE(is_lll_reduced(r, LllParams()));
  EXPECT_TRUE(same_lattice(b, r));
}

TEST(LllTest, QualityBoundAgainstOracle) {
  // With alpha = 3/4, |b1|^2 <= 2^(m-1) lambda1^2.
  Rng rng(35);
  const LllParams params(Rational(3, 4));
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t m = 4 + trial % 2;
    const Basis b = random_basis(m, m, -50, 50, rng);
    const Basis r = lll_reduce(b, params);
    const SvpResult oracle = svp_oracle(r, 3);
    Integer bound = oracle.norm_sq;
    bound <<= m - 1;
    EXPECT_LE(squared_norm(r[0]), bound);
  }
}

}  // namespace
}  // namespace latforge
