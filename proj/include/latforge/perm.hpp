#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "latforge/basis.hpp"
#include "latforge/random.hpp"

namespace latforge {

// An element of S_m. Stored 0-based: images()[i] is the image of i. The
// Cartesian form [pi(1), ..., pi(m)] used in reports is 1-based.
class Permutation {
 public:
  // Throws LatticeError(kBadParams) unless `images` is a bijection on
  // {0, ..., m-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t m);
  static Permutation from_cartesian(const std::vector<std::size_t>& one_based);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  std::vector<std::size_t> cartesian() const;

  Permutation inverse() const;
  // (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

enum class Side { kLeft, kRight };

struct RadiusClass {
  std::size_t radius = 0;
  Side side = Side::kLeft;
};

// Number of positions where the Cartesian forms differ.
std::size_t hamming_distance(const Permutation& x, const Permutation& y);

// Hamming distance from the identity; Left iff radius <= m/2.
RadiusClass radius(const Permutation& p);
Side side_of(std::size_t radius, std::size_t m);

// Throws kInfeasibleRadius unless r == 0 or 2 <= r <= m.
void check_radius(std::size_t m, std::size_t r);

// Uniform over the C(m,r) * D_r permutations with exactly r moved points:
// a uniform r-subset, then a uniform derangement of it by rejection.
Permutation sample_at_radius(std::size_t m, std::size_t r, Rng& rng);

// C(m,r) * D_r, with D_r the number of derangements of r symbols.
Integer count_at_radius(std::size_t m, std::size_t r);

// Radius uniform over the right radii (m/2, m], then sample_at_radius.
// Throws kDegreeTooSmall if m < 3.
Permutation sample_right(std::size_t m, Rng& rng);

bool is_prime(unsigned long p);

// Independent uniform elements of PSL(2,p) acting on the projective line
// {0, 1, ..., p-1, inf}; point x maps to index x and inf to index p, so the
// degree is p + 1. Throws kNotPrime.
std::vector<Permutation> psl2_permutations(unsigned long p, std::size_t count,
                                           Rng& rng);

// Row i of the result is row p(i) of b. Throws kDegreeMismatch.
Basis apply(const Basis& b, const Permutation& p);

}  // namespace latforge
