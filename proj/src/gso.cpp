#include "latforge/gso.hpp"

#include <string>

#include "latforge/error.hpp"

namespace latforge {

namespace {

Rational rational_dot(const std::vector<Rational>& a,
                      const std::vector<Rational>& b) {
  Rational acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

}  // namespace

GsoData gso(const Basis& b) {
  const std::size_t m = b.rank();
  const std::size_t n = b.dim();
  GsoData out;
  out.ortho.assign(m, std::vector<Rational>(n));
  out.mu.assign(m, std::vector<Rational>(m, 0));
  out.normsq.assign(m, 0);

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = b[i][k];
    auto& star = out.ortho[i];
    star = row;
    for (std::size_t j = 0; j < i; ++j) {
      Rational mu = rational_dot(row, out.ortho[j]) / out.normsq[j];
      out.mu[i][j] = mu;
      for (std::size_t k = 0; k < n; ++k) star[k] -= mu * out.ortho[j][k];
    }
    out.normsq[i] = rational_dot(star, star);
    if (out.normsq[i] == 0) {
      throw LatticeError(ErrorCode::kDependentRows,
                         "row " + std::to_string(i + 1) +
                             " lies in the span of the previous rows");
    }
  }
  return out;
}

}  // namespace latforge
