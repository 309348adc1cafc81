#include "latforge/perm.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "latforge/error.hpp"

namespace latforge {

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw LatticeError(ErrorCode::kBadParams,
                         "not a permutation of degree " +
                             std::to_string(images_.size()));
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<std::size_t> images(m);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cartesian(
    const std::vector<std::size_t>& one_based) {
  std::vector<std::size_t> images;
  images.reserve(one_based.size());
  for (std::size_t x : one_based) {
    if (x == 0) {
      throw LatticeError(ErrorCode::kBadParams,
                         "Cartesian form entries start at 1");
    }
    images.push_back(x - 1);
  }
  return Permutation(std::move(images));
}

std::vector<std::size_t> Permutation::cartesian() const {
  std::vector<std::size_t> out(images_);
  for (auto& x : out) ++x;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.degree() != degree()) {
    throw LatticeError(ErrorCode::kDegreeMismatch, "cannot compose degrees " +
                                                       std::to_string(degree()) +
                                                       " and " +
                                                       std::to_string(other.degree()));
  }
  std::vector<std::size_t> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[other(i)];
  return Permutation(std::move(out));
}

std::size_t hamming_distance(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) {
    throw LatticeError(ErrorCode::kDegreeMismatch,
                       "degrees " + std::to_string(x.degree()) + " and " +
                           std::to_string(y.degree()));
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.degree(); ++i) d += x(i) != y(i);
  return d;
}

Side side_of(std::size_t radius, std::size_t m) {
  return 2 * radius <= m ? Side::kLeft : Side::kRight;
}

RadiusClass radius(const Permutation& p) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) r += p(i) != i;
  return RadiusClass{r, side_of(r, p.degree())};
}

void check_radius(std::size_t m, std::size_t r) {
  if (r == 1 || r > m) {
    throw LatticeError(ErrorCode::kInfeasibleRadius,
                       "no permutation of degree " + std::to_string(m) +
                           " moves exactly " + std::to_string(r) + " points");
  }
}

Permutation sample_at_radius(std::size_t m, std::size_t r, Rng& rng) {
  check_radius(m, r);
  std::vector<std::size_t> images(m);
  std::iota(images.begin(), images.end(), std::size_t{0});
  if (r == 0) return Permutation(std::move(images));

  std::vector<std::size_t> moved;
  moved.reserve(r);
  std::sample(images.begin(), images.end(), std::back_inserter(moved), r, rng);

  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto has_fixed_point = [&] {
    for (std::size_t j = 0; j < r; ++j) {
      if (order[j] == j) return true;
    }
    return false;
  };
  do {
    std::shuffle(order.begin(), order.end(), rng);
  } while (has_fixed_point());

  for (std::size_t j = 0; j < r; ++j) images[moved[j]] = moved[order[j]];
  return Permutation(std::move(images));
}

Integer count_at_radius(std::size_t m, std::size_t r) {
  if (r > m) return 0;
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), m, r);
  // D_0 = 1, D_1 = 0, D_k = (k-1)(D_{k-1} + D_{k-2}).
  Integer prev = 1, cur = 0;
  if (r == 0) return binom;
  for (std::size_t k = 2; k <= r; ++k) {
    Integer next = Integer(static_cast<unsigned long>(k - 1)) * (cur + prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return binom * cur;
}

Permutation sample_right(std::size_t m, Rng& rng) {
  if (m < 3) {
    throw LatticeError(ErrorCode::kDegreeTooSmall,
                       "right permutations need degree >= 3, got " +
                           std::to_string(m));
  }
  std::uniform_int_distribution<std::size_t> pick(m / 2 + 1, m);
  return sample_at_radius(m, pick(rng), rng);
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

bool is_nonzero_square(std::uint64_t x, std::uint64_t p) {
  if (x == 0) return false;
  if (p == 2) return true;
  return pow_mod(x, (p - 1) / 2, p) == 1;
}

}  // namespace

std::vector<Permutation> psl2_permutations(unsigned long p, std::size_t count,
                                           Rng& rng) {
  if (!is_prime(p)) {
    throw LatticeError(ErrorCode::kNotPrime,
                       std::to_string(p) + " is not prime");
  }
  if (p >= (1UL << 31)) {
    throw LatticeError(ErrorCode::kBadParams, "prime too large");
  }
  const std::uint64_t q = p;
  const std::size_t infinity = p;
  std::uniform_int_distribution<std::uint64_t> field(0, q - 1);
  auto inv = [&](std::uint64_t x) { return pow_mod(x, q - 2, q); };

  std::vector<Permutation> out;
  out.reserve(count);
  while (out.size() < count) {
    // Matrices with square determinant, modulo scalars, are PSL(2,p); each
    // class has the same number of representatives, so rejection is uniform.
    const std::uint64_t a = field(rng), b = field(rng), c = field(rng),
                        d = field(rng);
    const std::uint64_t det = (a * d % q + q * q - b * c % q) % q;
    if (!is_nonzero_square(det, q)) continue;

    std::vector<std::size_t> images(p + 1);
    for (std::uint64_t x = 0; x < q; ++x) {
      const std::uint64_t num = (a * x + b) % q;
      const std::uint64_t den = (c * x + d) % q;
      images[x] = den == 0 ? infinity : num * inv(den) % q;
    }
    images[infinity] = c == 0 ? infinity : a * inv(c) % q;
    out.emplace_back(std::move(images));
  }
  return out;
}

Basis apply(const Basis& b, const Permutation& p) {
  if (p.degree() != b.rank()) {
    throw LatticeError(ErrorCode::kDegreeMismatch,
                       "permutation degree " + std::to_string(p.degree()) +
                           " vs basis rank " + std::to_string(b.rank()));
  }
  std::vector<Row> rows;
  rows.reserve(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) rows.push_back(b[p(i)]);
  return Basis(std::move(rows), Basis::unchecked);
}

}  // namespace latforge
