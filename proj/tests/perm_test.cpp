#include "latforge/perm.hpp"

#include <gtest/gtest.h>

#include <set>

#include "latforge/error.hpp"
#include "latforge/generators.hpp"
#include "latforge/hnf.hpp"
#include "test_util.hpp"
#include "uniformity.hpp"

namespace latforge {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const LatticeError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no LatticeError thrown";
  return ErrorCode::kParseError;
}

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), LatticeError);
  EXPECT_THROW(Permutation({0, 3, 1}), LatticeError);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(PermutationTest, CartesianIsOneBased) {
  const Permutation p = Permutation::from_cartesian({2, 3, 1});
  EXPECT_EQ(p.images(), (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(p.cartesian(), (std::vector<std::size_t>{2, 3, 1}));
  EXPECT_EQ(p.compose(p.inverse()), Permutation::identity(3));
}

TEST(HammingTest, Examples) {
  const auto id4 = Permutation::identity(4);
  EXPECT_EQ(hamming_distance(id4, id4), 0u);
  EXPECT_EQ(hamming_distance(Permutation::from_cartesian({2, 1, 3, 4}), id4),
            2u);
  EXPECT_EQ(hamming_distance(Permutation::from_cartesian({2, 3, 1}),
                             Permutation::from_cartesian({3, 1, 2})),
            3u);
  EXPECT_EQ(code_of([&] { hamming_distance(id4, Permutation::identity(5)); }),
            ErrorCode::kDegreeMismatch);
}

TEST(HammingTest, MetricAxiomsOnS8) {
  Rng rng(41);
  auto draw = [&] {
    std::vector<std::size_t> v(8);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const auto x = draw(), y = draw(), z = draw();
    EXPECT_EQ(hamming_distance(x, x), 0u);
    EXPECT_EQ(hamming_distance(x, y) == 0, x == y);
    EXPECT_EQ(hamming_distance(x, y), hamming_distance(y, x));
    EXPECT_LE(hamming_distance(x, z),
              hamming_distance(x, y) + hamming_distance(y, z));
  }
}

TEST(RadiusTest, Classes) {
  const RadiusClass id = radius(Permutation::identity(10));
  EXPECT_EQ(id.radius, 0u);
  EXPECT_EQ(id.side, Side::kLeft);
  EXPECT_EQ(side_of(6, 10), Side::kRight);
  EXPECT_EQ(side_of(5, 10), Side::kLeft);
  const auto p = Permutation::from_cartesian({2, 1, 4, 3, 6, 5, 7, 8, 9, 10});
  EXPECT_EQ(radius(p).radius, 6u);
  EXPECT_EQ(radius(p).side, Side::kRight);
}

TEST(SampleAtRadiusTest, EdgeCases) {
  Rng rng(42);
  EXPECT_EQ(sample_at_radius(4, 0, rng), Permutation::identity(4));
  EXPECT_EQ(code_of([&] { sample_at_radius(4, 1, rng); }),
            ErrorCode::kInfeasibleRadius);
  EXPECT_EQ(code_of([&] { sample_at_radius(4, 5, rng); }),
            ErrorCode::kInfeasibleRadius);
}

TEST(SampleAtRadiusTest, ExactRadius) {
  Rng rng(43);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t m = 2 + trial % 15;
    const std::size_t r = trial % 7 == 0 ? 0 : 2 + trial % (m - 1);
    ASSERT_EQ(radius(sample_at_radius(m, r, rng)).radius, r);
  }
}

TEST(SampleAtRadiusTest, TranspositionsUniform) {
  Rng rng(44);
  const auto fit = testing::sphere_chi_square(6, 2, 10000, rng);
  EXPECT_EQ(fit.unseen, 0u);
  EXPECT_EQ(fit.off_sphere, 0u);
  EXPECT_GE(fit.p_value, 0.001);
}

TEST(SampleAtRadiusTest, Reproducible) {
  Rng a(45), b(45);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(sample_at_radius(12, 7, a), sample_at_radius(12, 7, b));
  }
}

TEST(CountAtRadiusTest, MatchesBruteForce) {
  EXPECT_EQ(count_at_radius(7, 0), 1);
  EXPECT_EQ(count_at_radius(7, 1), 0);
  EXPECT_EQ(count_at_radius(4, 2), 6);
  EXPECT_EQ(count_at_radius(6, 3), 40);
  for (std::size_t m = 1; m <= 7; ++m) {
    for (std::size_t r = 0; r <= m; ++r) {
      EXPECT_EQ(count_at_radius(m, r),
                testing::brute_force_sphere(m, r).size())
          << m << " " << r;
    }
  }
}

TEST(SampleRightTest, OnlyRightRadii) {
  Rng rng(46);
  for (int i = 0; i < 200; ++i) {
    const auto r = radius(sample_right(3, rng)).radius;
    EXPECT_TRUE(r == 2 || r == 3);
  }
  std::set<std::size_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto c = radius(sample_right(10, rng));
    EXPECT_GT(c.radius, 5u);
    EXPECT_EQ(c.side, Side::kRight);
    seen.insert(c.radius);
  }
  EXPECT_EQ(seen, (std::set<std::size_t>{6, 7, 8, 9, 10}));
  EXPECT_EQ(code_of([&] { sample_right(2, rng); }), ErrorCode::kDegreeTooSmall);
}

// Size of the group generated by `gens`, by closure under composition.
std::size_t closure_order(const std::vector<Permutation>& gens) {
  std::set<Permutation> group{Permutation::identity(gens[0].degree())};
  std::vector<Permutation> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        Permutation h = s.compose(g);
        if (group.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return group.size();
}

TEST(Psl2Test, GeneratesTheWholeGroup) {
  Rng rng(47);
  const std::pair<unsigned long, std::size_t> cases[] = {
      {3, 12}, {5, 60}, {7, 168}};
  for (const auto& [p, order] : cases) {
    const auto perms = psl2_permutations(p, 40, rng);
    ASSERT_EQ(perms.size(), 40u);
    EXPECT_EQ(perms[0].degree(), p + 1);
    EXPECT_EQ(closure_order(perms), order) << p;
  }
}

TEST(Psl2Test, ElementsAreMobiusMaps) {
  // Every element fixes the cross-ratio structure; a cheap necessary check is
  // that no non-identity element fixes three points.
  Rng rng(48);
  for (const auto& g : psl2_permutations(11, 200, rng)) {
    if (g == Permutation::identity(12)) continue;
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < 12; ++i) fixed += g(i) == i;
    EXPECT_LE(fixed, 2u);
  }
}

TEST(Psl2Test, NotPrime) {
  Rng rng(49);
  EXPECT_EQ(code_of([&] { psl2_permutations(4, 1, rng); }),
            ErrorCode::kNotPrime);
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(101));
}

TEST(ApplyTest, GroupAction) {
  Rng rng(50);
  const Basis b = random_basis(6, 6, -9, 9, rng);
  EXPECT_EQ(apply(b, Permutation::identity(6)), b);
  const Permutation p = sample_at_radius(6, 5, rng);
  EXPECT_EQ(apply(apply(b, p), p.inverse()), b);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(apply(b, p)[i], b[p(i)]);
  EXPECT_EQ(hnf(apply(b, p)), hnf(b));
  EXPECT_EQ(code_of([&] { apply(b, Permutation::identity(5)); }),
            ErrorCode::kDegreeMismatch);
}

}  // namespace
}  // namespace latforge
