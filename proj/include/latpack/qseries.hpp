// Truncated power series with exact rational coefficients, in the nome q
// (var_scale 1) or the quarter-nome u with u^4 = q (var_scale 4), plus the
// classical expansions built on top of them: Eisenstein series, the
// discriminant cusp form, Ramanujan tau, Jacobi theta constants, and the
// Hecke operators T_p.
//
// Truncation is tracked explicitly: a series of order N carries coefficients
// for exponents 0..N and binary operations truncate to the smaller operand
// order. Arithmetic never rounds and never silently extends a series.
#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>

#include "latpack/rational.hpp"

namespace latpack {

using RationalVector = Eigen::Vector<Rational, Eigen::Dynamic>;

class QSeries {
 public:
  // Zero series of the given truncation order.
  QSeries(int var_scale, int order)
      : var_scale_(var_scale), order_(order), coeffs_(RationalVector::Zero(order + 1)) {
    check_scale(var_scale);
    if (order < 0) throw std::invalid_argument("QSeries: order must be >= 0");
  }

  QSeries(int var_scale, RationalVector coeffs)
      : var_scale_(var_scale), order_(static_cast<int>(coeffs.size()) - 1), coeffs_(std::move(coeffs)) {
    check_scale(var_scale);
    if (coeffs_.size() == 0) throw std::invalid_argument("QSeries: empty coefficient vector");
  }

  static QSeries constant(int var_scale, const Rational& c, int order) {
    QSeries s(var_scale, order);
    s.coeffs_[0] = c;
    return s;
  }

  int var_scale() const { return var_scale_; }
  int order() const { return order_; }
  const Rational& coeff(int i) const {
    if (i < 0 || i > order_) throw std::out_of_range("QSeries: coefficient index beyond truncation");
    return coeffs_[i];
  }
  Rational& coeff_mut(int i) {
    if (i < 0 || i > order_) throw std::out_of_range("QSeries: coefficient index beyond truncation");
    return coeffs_[i];
  }
  const RationalVector& coeffs() const { return coeffs_; }

  std::optional<int> weight() const { return weight_; }
  QSeries& set_weight(int w) {
    weight_ = w;
    return *this;
  }

  bool is_zero() const {
    for (int i = 0; i <= order_; ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  QSeries truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("QSeries: truncation cannot extend a series");
    QSeries r(var_scale_, new_order);
    r.coeffs_ = coeffs_.head(new_order + 1);
    r.weight_ = weight_;
    return r;
  }

  QSeries operator+(const QSeries& o) const {
    const int n = common_order(o);
    QSeries r(var_scale_, n);
    r.coeffs_ = coeffs_.head(n + 1) + o.coeffs_.head(n + 1);
    return r;
  }

  QSeries operator-(const QSeries& o) const {
    const int n = common_order(o);
    QSeries r(var_scale_, n);
    r.coeffs_ = coeffs_.head(n + 1) - o.coeffs_.head(n + 1);
    return r;
  }

  QSeries operator*(const QSeries& o) const {
    const int n = common_order(o);
    QSeries r(var_scale_, n);
    for (int i = 0; i <= n; ++i) {
      if (coeffs_[i] == 0) continue;
      for (int j = 0; j + i <= n; ++j) {
        if (o.coeffs_[j] == 0) continue;
        r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    return r;
  }

  QSeries operator*(const Rational& c) const {
    QSeries r(var_scale_, order_);
    for (int i = 0; i <= order_; ++i) r.coeffs_[i] = coeffs_[i] * c;
    return r;
  }
  // Hidden friend: keeps this overload out of namespace-scope lookup, where
  // it would force Rational conversion checks on unrelated operand types.
  friend QSeries operator*(const Rational& c, const QSeries& s) { return s * c; }

  QSeries pow(unsigned e) const {
    QSeries r = constant(var_scale_, 1, order_);
    QSeries base = *this;
    while (e) {
      if (e & 1u) r = r * base;
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

  // Exact equality of the mathematical content (scale, order, coefficients);
  // the weight annotation is metadata and is ignored.
  bool operator==(const QSeries& o) const {
    if (var_scale_ != o.var_scale_ || order_ != o.order_) return false;
    for (int i = 0; i <= order_; ++i)
      if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
  }
  bool operator!=(const QSeries& o) const { return !(*this == o); }

  // Re-index a var_scale=1 series as a var_scale=4 series (q = u^4). The
  // intermediate u-exponents are known to vanish, so the faithful order is
  // 4*order + 3.
  QSeries dilated_to_quarter_nome() const {
    if (var_scale_ != 1) throw std::invalid_argument("QSeries: dilation expects a var_scale=1 series");
    QSeries r(4, 4 * order_ + 3);
    for (int i = 0; i <= order_; ++i) r.coeffs_[4 * i] = coeffs_[i];
    r.weight_ = weight_;
    return r;
  }

  // Inverse of the dilation: requires every coefficient at a u-exponent not
  // divisible by 4 to vanish. Output order is floor(order/4).
  QSeries projected_to_nome() const {
    if (var_scale_ != 4) throw std::invalid_argument("QSeries: projection expects a var_scale=4 series");
    for (int i = 0; i <= order_; ++i) {
      if (i % 4 != 0 && coeffs_[i] != 0)
        throw std::domain_error("QSeries: nonzero coefficient at u-exponent " + std::to_string(i) +
                                " not divisible by 4; series does not descend to the nome");
    }
    QSeries r(1, order_ / 4);
    for (int i = 0; i <= r.order_; ++i) r.coeffs_[i] = coeffs_[4 * i];
    r.weight_ = weight_;
    return r;
  }

 private:
  static void check_scale(int s) {
    if (s != 1 && s != 4) throw std::invalid_argument("QSeries: var_scale must be 1 or 4");
  }
  int common_order(const QSeries& o) const {
    if (var_scale_ != o.var_scale_)
      throw std::invalid_argument("QSeries: arithmetic requires equal var_scale");
    return std::min(order_, o.order_);
  }

  int var_scale_;
  int order_;
  RationalVector coeffs_;
  std::optional<int> weight_;
};

// Bernoulli number B_k under the convention B_1 = -1/2. Only even k (and
// k = 0, 1) are meaningful here; odd k >= 3 are rejected.
Rational bernoulli(int k);

// sigma_k(n) = sum of d^k over divisors d of n.
Integer divisor_sigma(long long n, int k);

// E_k = 1 - (2k/B_k) sum_{n>=1} sigma_{k-1}(n) q^n, weight-annotated.
QSeries eisenstein_series(int k, int order);

// Discriminant cusp form Delta, computed both as (E_4^3 - E_6^2)/1728 and as
// q prod_{n>=1} (1-q^n)^24; throws if the two expansions disagree.
QSeries discriminant_delta(int order);

// Coefficient of q^n in Delta.
Integer ramanujan_tau(long long n);

// Jacobi theta constants in the quarter-nome: kind 3 is sum_n u^{4n^2},
// kind 2 is sum_n u^{(2n+1)^2}.
QSeries theta_constant(int kind, int order_u);

// Hecke operator T_p at weight k: (T_p f)_n = a_{pn} + p^{k-1} a_{n/p}.
// The output order defaults to floor(f.order()/p); asking for more is
// rejected as insufficient truncation.
QSeries hecke_operator(const QSeries& f, long long p, int k, int out_order = -1);

}  // namespace latpack
