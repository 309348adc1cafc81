#include "latforge/lll.hpp"

#include <string>
#include <utility>

#include "latforge/error.hpp"
#include "latforge/gso.hpp"

namespace latforge {

LllParams::LllParams(Rational alpha) : alpha_(std::move(alpha)) {
  alpha_.canonicalize();
  if (alpha_ <= Rational(1, 4) || alpha_ >= 1) {
    throw LatticeError(ErrorCode::kBadParams,
                       "alpha must lie in (1/4, 1), got " + alpha_.get_str());
  }
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto bad = [&] {
    return LatticeError(ErrorCode::kBadParams, "not a rational: '" + s + "'");
  };
  auto check_digits = [&](std::string_view digits, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+'))
      start = 1;
    if (digits.size() == start) throw bad();
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') throw bad();
    }
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw bad();
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
  }
  std::string whole = s;
  std::string frac;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    whole = s.substr(0, dot);
    frac = s.substr(dot + 1);
    if (!frac.empty()) check_digits(frac, false);
  }
  bool negative = !whole.empty() && whole[0] == '-';
  if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
  if (whole.empty() && frac.empty()) throw bad();
  if (!whole.empty()) check_digits(whole, false);
  Integer num(whole.empty() ? std::string("0") : whole);
  Integer den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational q(negative ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

namespace {

class IntegralLll {
 public:
  IntegralLll(std::vector<Row> rows, const Rational& alpha)
      : rows_(std::move(rows)),
        m_(rows_.size()),
        lambda_(m_, Row(m_, 0)),
        d_(m_ + 1, 0),
        alpha_num_(alpha.get_num()),
        alpha_den_(alpha.get_den()) {}

  std::vector<Row> run() {
    d_[0] = 1;
    d_[1] = squared_norm(rows_[0]);
    if (d_[1] == 0) throw dependent(0);
    std::size_t k = 1;
    std::size_t kmax = 0;
    while (k < m_) {
      if (k > kmax) {
        kmax = k;
        extend_gso(k);
      }
      reduce(k, k - 1);
      if (lovasz_fails(k)) {
        swap(k, kmax);
        if (k > 1) --k;
        continue;
      }
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
    return std::move(rows_);
  }

 private:
  static LatticeError dependent(std::size_t row) {
    return LatticeError(ErrorCode::kDependentRows,
                        "row " + std::to_string(row + 1) +
                            " lies in the span of the previous rows");
  }

  // d_[i + 1] is the Gram determinant of rows 0..i; lambda_[i][j] = d_[j+1] *
  // mu_ij.
  void extend_gso(std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      Integer u = dot(rows_[k], rows_[j]);
      for (std::size_t i = 0; i < j; ++i) {
        tmp_ = d_[i + 1] * u;
        mpz_submul(tmp_.get_mpz_t(), lambda_[k][i].get_mpz_t(),
                   lambda_[j][i].get_mpz_t());
        mpz_divexact(u.get_mpz_t(), tmp_.get_mpz_t(), d_[i].get_mpz_t());
      }
      if (j < k) {
        lambda_[k][j] = std::move(u);
      } else {
        if (u == 0) throw dependent(k);
        d_[k + 1] = std::move(u);
      }
    }
  }

  // Size-reduce row k against row l when 2|lambda_kl| > d_l.
  void reduce(std::size_t k, std::size_t l) {
    const Integer& dl = d_[l + 1];
    tmp_ = 2 * lambda_[k][l];
    if (cmp_abs(tmp_, dl) <= 0) return;
    // r = round(lambda_kl / d_l) = floor((2 lambda + d) / 2d)
    tmp_ += dl;
    Integer two_d = 2 * dl;
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), tmp_.get_mpz_t(), two_d.get_mpz_t());
    for (std::size_t c = 0; c < rows_[k].size(); ++c) {
      mpz_submul(rows_[k][c].get_mpz_t(), r.get_mpz_t(),
                 rows_[l][c].get_mpz_t());
    }
    mpz_submul(lambda_[k][l].get_mpz_t(), r.get_mpz_t(), dl.get_mpz_t());
    for (std::size_t i = 0; i < l; ++i) {
      mpz_submul(lambda_[k][i].get_mpz_t(), r.get_mpz_t(),
                 lambda_[l][i].get_mpz_t());
    }
  }

  // |b*_k|^2 < (alpha - mu^2) |b*_{k-1}|^2, cleared of denominators:
  // den * (d_k d_{k-2} + lambda^2) < num * d_{k-1}^2.
  bool lovasz_fails(std::size_t k) {
    Integer lhs = d_[k + 1] * d_[k - 1];
    mpz_addmul(lhs.get_mpz_t(), lambda_[k][k - 1].get_mpz_t(),
               lambda_[k][k - 1].get_mpz_t());
    lhs *= alpha_den_;
    Integer rhs = d_[k] * d_[k];
    rhs *= alpha_num_;
    return lhs < rhs;
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(rows_[k], rows_[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) {
      std::swap(lambda_[k][j], lambda_[k - 1][j]);
    }
    const Integer lam = lambda_[k][k - 1];
    Integer b = d_[k - 1] * d_[k + 1];
    mpz_addmul(b.get_mpz_t(), lam.get_mpz_t(), lam.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d_[k].get_mpz_t());
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Integer t = lambda_[i][k];
      tmp_ = d_[k + 1] * lambda_[i][k - 1];
      mpz_submul(tmp_.get_mpz_t(), lam.get_mpz_t(), t.get_mpz_t());
      mpz_divexact(lambda_[i][k].get_mpz_t(), tmp_.get_mpz_t(),
                   d_[k].get_mpz_t());
      tmp_ = b * t;
      mpz_addmul(tmp_.get_mpz_t(), lam.get_mpz_t(),
                 lambda_[i][k].get_mpz_t());
      mpz_divexact(lambda_[i][k - 1].get_mpz_t(), tmp_.get_mpz_t(),
                   d_[k + 1].get_mpz_t());
    }
    d_[k] = std::move(b);
  }

  std::vector<Row> rows_;
  std::size_t m_;
  std::vector<Row> lambda_;
  std::vector<Integer> d_;
  Integer alpha_num_;
  Integer alpha_den_;
  Integer tmp_;
};

}  // namespace

Basis lll_reduce(const Basis& b, const LllParams& params) {
  IntegralLll engine(b.rows(), params.alpha());
  return Basis(engine.run(), Basis::unchecked);
}

bool is_lll_reduced(const Basis& b, const LllParams& params) {
  const GsoData g = gso(b);
  const Rational half(1, 2);
  for (std::size_t i = 1; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (abs(g.mu[i][j]) > half) return false;
    }
    const Rational& mu = g.mu[i][i - 1];
    if (g.normsq[i] < (params.alpha() - mu * mu) * g.normsq[i - 1]) {
      return false;
    }
  }
  return true;
}

}  // namespace latforge
