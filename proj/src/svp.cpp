#include "latforge/svp.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "latforge/error.hpp"

namespace latforge {

namespace {

// Odometer over [-bound, bound]^m in lexicographic order, keeping the running
// lattice vector up to date with one row addition per step (plus a
// subtraction of 2*bound*row on each wrap).
template <typename Scalar>
struct Enumerator {
  std::vector<std::vector<Scalar>> rows;
  long bound = 1;

  template <typename SqNorm>
  void run(SqNorm&& sq_norm, std::vector<long>& best_coeffs,
           Scalar& best_norm, bool& found, std::uint64_t& checked) {
    const std::size_t m = rows.size();
    const std::size_t n = rows.front().size();
    std::vector<long> coeffs(m, -bound);
    std::vector<Scalar> v(n, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < n; ++k) v[k] -= Scalar(bound) * rows[i][k];
    }
    while (true) {
      bool zero = true;
      for (long c : coeffs) zero = zero && c == 0;
      if (!zero) {
        ++checked;
        Scalar s = sq_norm(v);
        if (!found || s < best_norm) {
          found = true;
          best_norm = s;
          best_coeffs = coeffs;
        }
      }
      // Advance the last coordinate fastest.
      std::size_t i = m;
      while (i > 0) {
        --i;
        if (coeffs[i] < bound) {
          ++coeffs[i];
          for (std::size_t k = 0; k < n; ++k) v[k] += rows[i][k];
          break;
        }
        coeffs[i] = -bound;
        for (std::size_t k = 0; k < n; ++k) v[k] -= Scalar(2 * bound) * rows[i][k];
        if (i == 0) return;
      }
    }
  }
};

bool fits_machine_words(const Basis& b, long bound) {
  // |v_k| <= m * bound * max|b_ij| and |v|^2 <= n * that^2 must fit in int64.
  const Integer max_entry = b.max_abs_entry();
  Integer coord = Integer(static_cast<unsigned long>(b.rank())) * bound *
                  max_entry;
  Integer sq = coord * coord * Integer(static_cast<unsigned long>(b.dim()));
  return sq < Integer("4611686018427387904");  // 2^62
}

}  // namespace

SvpResult svp_oracle(const Basis& b, long coeff_bound, std::uint64_t budget) {
  if (coeff_bound < 1) {
    throw LatticeError(ErrorCode::kBadParams, "coeff_bound must be >= 1");
  }
  const std::size_t m = b.rank();
  {
    Integer box = 1;
    for (std::size_t i = 0; i < m; ++i) box *= 2 * coeff_bound + 1;
    if (box > Integer(std::to_string(budget))) {
      throw LatticeError(ErrorCode::kBoxTooLarge,
                         "(2*" + std::to_string(coeff_bound) + "+1)^" +
                             std::to_string(m) + " = " + box.get_str() +
                             " exceeds the budget of " +
                             std::to_string(budget));
    }
  }

  SvpResult out;
  std::vector<long> best;
  bool found = false;
  if (fits_machine_words(b, coeff_bound)) {
    Enumerator<std::int64_t> e;
    e.bound = coeff_bound;
    for (const auto& row : b.rows()) {
      auto& r = e.rows.emplace_back();
      for (const auto& x : row) r.push_back(x.get_si());
    }
    std::int64_t best_norm = 0;
    e.run(
        [](const std::vector<std::int64_t>& v) {
          std::int64_t s = 0;
          for (auto x : v) s += x * x;
          return s;
        },
        best, best_norm, found, out.count_checked);
  } else {
    Enumerator<Integer> e;
    e.bound = coeff_bound;
    e.rows = b.rows();
    Integer best_norm;
    e.run([](const std::vector<Integer>& v) { return squared_norm(v); }, best,
          best_norm, found, out.count_checked);
  }

  out.vector.assign(b.dim(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    out.coefficients.emplace_back(best[i]);
    for (std::size_t k = 0; k < b.dim(); ++k) {
      out.vector[k] += best[i] * b[i][k];
    }
  }
  out.norm_sq = squared_norm(out.vector);
  out.lambda1 = sqrt_of(out.norm_sq);
  return out;
}

}  // namespace latforge
