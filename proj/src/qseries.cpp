#include "latpack/qseries.hpp"

#include <vector>

namespace latpack {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli: k must be >= 0");
  if (k % 2 != 0 && k != 1) throw std::invalid_argument("bernoulli: odd k > 1 not supported");
  // sum_{j=0}^{k} C(k+1, j) B_j = 0, solved upward from B_0 = 1.
  std::vector<Rational> b(static_cast<size_t>(k) + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -acc / Rational(m + 1);
  }
  return b[k];
}

Integer divisor_sigma(long long n, int k) {
  if (n < 1) throw std::invalid_argument("divisor_sigma: n must be >= 1");
  if (k < 0) throw std::invalid_argument("divisor_sigma: k must be >= 0");
  Integer total = 0;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += int_pow(Integer(d), static_cast<unsigned>(k));
    const long long e = n / d;
    if (e != d) total += int_pow(Integer(e), static_cast<unsigned>(k));
  }
  return total;
}

QSeries eisenstein_series(int k, int order) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("eisenstein_series: weight must be even and >= 4");
  if (order < 0) throw std::invalid_argument("eisenstein_series: order must be >= 0");
  const Rational factor = Rational(-2 * k) / bernoulli(k);
  QSeries e(1, order);
  e.coeff_mut(0) = 1;
  for (int n = 1; n <= order; ++n) e.coeff_mut(n) = factor * Rational(divisor_sigma(n, k - 1));
  e.set_weight(k);
  return e;
}

QSeries discriminant_delta(int order) {
  if (order < 1) throw std::invalid_argument("discriminant_delta: order must be >= 1");

  const QSeries e4 = eisenstein_series(4, order);
  const QSeries e6 = eisenstein_series(6, order);
  const QSeries poly = (e4.pow(3) - e6.pow(2)) * Rational(1, 1728);

  // q prod_{n>=1} (1 - q^n)^24, truncated. Factors with n > order cannot
  // contribute below the truncation.
  RationalVector prod = RationalVector::Zero(order + 1);
  prod[1] = 1;
  for (int n = 1; n < order; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int i = order; i >= n + 1; --i) prod[i] -= prod[i - n];
    }
  }
  QSeries product(1, std::move(prod));

  if (!(product == poly))
    throw std::logic_error("discriminant_delta: product and polynomial expansions disagree");
  product.set_weight(12);
  return product;
}

Integer ramanujan_tau(long long n) {
  if (n < 1) throw std::invalid_argument("ramanujan_tau: n must be >= 1");
  const QSeries delta = discriminant_delta(static_cast<int>(n));
  const Rational a = delta.coeff(static_cast<int>(n));
  return rat_num(a);  // Delta has integer coefficients
}

QSeries theta_constant(int kind, int order_u) {
  if (order_u < 0) throw std::invalid_argument("theta_constant: order must be >= 0");
  QSeries t(4, order_u);
  if (kind == 3) {
    t.coeff_mut(0) = 1;
    for (long long m = 1; 4 * m * m <= order_u; ++m) t.coeff_mut(static_cast<int>(4 * m * m)) = 2;
  } else if (kind == 2) {
    for (long long m = 0; (2 * m + 1) * (2 * m + 1) <= order_u; ++m)
      t.coeff_mut(static_cast<int>((2 * m + 1) * (2 * m + 1))) = 2;
  } else {
    throw std::invalid_argument("theta_constant: kind must be 2 or 3");
  }
  return t;
}

QSeries hecke_operator(const QSeries& f, long long p, int k, int out_order) {
  if (f.var_scale() != 1) throw std::invalid_argument("hecke_operator: series must be in the nome (var_scale 1)");
  if (!is_prime(p)) throw std::invalid_argument("hecke_operator: p must be prime");
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("hecke_operator: weight must be even and >= 4");
  const int max_out = static_cast<int>(f.order() / p);
  if (out_order < 0) out_order = max_out;
  if (out_order > max_out)
    throw std::invalid_argument("hecke_operator: input truncation order insufficient for requested output order");

  const Rational pk = Rational(int_pow(Integer(p), static_cast<unsigned>(k - 1)));
  QSeries g(1, out_order);
  for (int n = 0; n <= out_order; ++n) {
    Rational a = f.coeff(static_cast<int>(p * n));
    if (n % p == 0) a += pk * f.coeff(static_cast<int>(n / p));
    g.coeff_mut(n) = a;
  }
  g.set_weight(k);
  return g;
}

}  // namespace latpack
