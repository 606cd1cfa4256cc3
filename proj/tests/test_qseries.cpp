#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latpack/json_io.hpp"
#include "latpack/qseries.hpp"

using namespace latpack;

namespace {

// Independent Bernoulli oracle: Akiyama-Tanigawa transform. The library uses
// the binomial-sum recurrence; the two share no code path.
Rational bernoulli_akiyama_tanigawa(int n) {
  std::vector<Rational> a(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  return a[0];  // convention B_1 = +1/2; agrees with the library on even n
}

long long gcd_ll(long long a, long long b) { return b == 0 ? a : gcd_ll(b, a % b); }

}  // namespace

TEST_CASE("bernoulli: frozen values and recurrence sanity") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK_THROWS_AS(bernoulli(3), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli(-2), std::invalid_argument);
}

TEST_CASE("bernoulli: matches the Akiyama-Tanigawa oracle for even k <= 40") {
  for (int k = 0; k <= 40; k += 2) {
    CAPTURE(k);
    CHECK(bernoulli(k) == bernoulli_akiyama_tanigawa(k));
  }
}

TEST_CASE("divisor_sigma: frozen values") {
  CHECK(divisor_sigma(1, 3) == 1);
  CHECK(divisor_sigma(6, 3) == 252);
  CHECK(divisor_sigma(2, 11) == 2049);
  CHECK_THROWS_AS(divisor_sigma(0, 3), std::invalid_argument);
}

TEST_CASE("divisor_sigma: multiplicative on random coprime pairs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> pick(1, 300);
  int found = 0;
  while (found < 200) {
    const long long m = pick(rng), n = pick(rng);
    if (gcd_ll(m, n) != 1) continue;
    ++found;
    CHECK(divisor_sigma(m * n, 3) == divisor_sigma(m, 3) * divisor_sigma(n, 3));
  }
}

TEST_CASE("eisenstein series: E4, E6, E12 leading coefficients") {
  const QSeries e4 = eisenstein_series(4, 2);
  CHECK(e4.coeff(0) == Rational(1));
  CHECK(e4.coeff(1) == Rational(240));
  CHECK(e4.coeff(2) == Rational(2160));
  CHECK(e4.weight().value() == 4);

  const QSeries e6 = eisenstein_series(6, 1);
  CHECK(e6.coeff(1) == Rational(-504));

  const QSeries e12 = eisenstein_series(12, 1);
  CHECK(e12.coeff(1) == Rational(65520, 691));

  CHECK_THROWS_AS(eisenstein_series(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein_series(2, 3), std::invalid_argument);
}

TEST_CASE("E4^3 - E6^2 is 1728 Delta at the bottom") {
  const int order = 6;
  const QSeries diff = eisenstein_series(4, order).pow(3) - eisenstein_series(6, order).pow(2);
  CHECK(diff.coeff(0) == Rational(0));
  CHECK(diff.coeff(1) == Rational(1728));
}

TEST_CASE("discriminant: product and polynomial routes agree to order 200") {
  // The constructor itself cross-checks the two expansions and throws on any
  // mismatch, so surviving the call is the assertion.
  const QSeries delta = discriminant_delta(200);
  CHECK(delta.coeff(0) == Rational(0));
  CHECK(delta.coeff(1) == Rational(1));
  CHECK(delta.coeff(2) == Rational(-24));
  CHECK(delta.coeff(3) == Rational(252));
}

TEST_CASE("ramanujan tau: frozen values and multiplicativity") {
  CHECK(ramanujan_tau(1) == 1);
  CHECK(ramanujan_tau(2) == -24);
  CHECK(ramanujan_tau(17) == -6905934);
  CHECK_THROWS_AS(ramanujan_tau(0), std::invalid_argument);

  const QSeries delta = discriminant_delta(60);
  auto tau = [&](int n) { return rat_num(delta.coeff(n)); };
  for (int m = 2; m <= 7; ++m) {
    for (int n = m + 1; m * n <= 60; ++n) {
      if (gcd_ll(m, n) != 1) continue;
      CAPTURE(m);
      CAPTURE(n);
      CHECK(tau(m * n) == tau(m) * tau(n));
    }
  }
}

TEST_CASE("theta constants: definitional expansions") {
  const QSeries t3 = theta_constant(3, 8);
  CHECK(t3.coeff(0) == Rational(1));
  CHECK(t3.coeff(4) == Rational(2));
  for (int i : {1, 2, 3, 5, 6, 7, 8}) CHECK(t3.coeff(i) == Rational(0));

  const QSeries t2 = theta_constant(2, 9);
  CHECK(t2.coeff(1) == Rational(2));
  CHECK(t2.coeff(9) == Rational(2));
  CHECK(t2.coeff(0) == Rational(0));

  CHECK(theta_constant(3, 0).coeff(0) == Rational(1));
  CHECK_THROWS_AS(theta_constant(1, 4), std::invalid_argument);
}

TEST_CASE("Gleason identity: theta3^8 + 14 theta3^4 theta2^4 + theta2^8 equals E4") {
  const int q_order = 10;
  const int u_order = 4 * q_order + 3;
  const QSeries t3 = theta_constant(3, u_order);
  const QSeries t2 = theta_constant(2, u_order);
  const QSeries w = t3.pow(8) + Rational(14) * (t3.pow(4) * t2.pow(4)) + t2.pow(8);
  const QSeries projected = w.projected_to_nome().truncated(q_order);
  CHECK(projected == eisenstein_series(4, q_order));
}

TEST_CASE("hecke operator: eigenforms and linearity") {
  const QSeries delta10 = discriminant_delta(10);
  const QSeries t2_delta = hecke_operator(delta10, 2, 12);
  CHECK(t2_delta.order() == 5);
  const QSeries want = discriminant_delta(5) * Rational(-24);
  CHECK(t2_delta == want);

  const QSeries e4 = eisenstein_series(4, 12);
  const QSeries t2_e4 = hecke_operator(e4, 2, 4);
  CHECK(t2_e4 == eisenstein_series(4, 6) * Rational(9));

  const QSeries zero(1, 9);
  CHECK(hecke_operator(zero, 3, 12).is_zero());
}

TEST_CASE("hecke operators commute: T_p T_q = T_q T_p for p, q <= 5 at weight 12") {
  const QSeries f = eisenstein_series(12, 60) + discriminant_delta(60) * Rational(7);
  const std::vector<long long> primes{2, 3, 5};
  for (long long p : primes) {
    for (long long q : primes) {
      if (p == q) continue;
      const QSeries pq = hecke_operator(hecke_operator(f, p, 12), q, 12);
      const QSeries qp = hecke_operator(hecke_operator(f, q, 12), p, 12);
      const int n = std::min(pq.order(), qp.order());
      CHECK(pq.truncated(n) == qp.truncated(n));
    }
  }
}

TEST_CASE("hecke operator: contract violations") {
  const QSeries delta10 = discriminant_delta(10);
  CHECK_THROWS_AS(hecke_operator(delta10, 2, 12, 6), std::invalid_argument);  // needs order >= 12
  CHECK_THROWS_AS(hecke_operator(delta10, 4, 12), std::invalid_argument);    // not prime
  CHECK_THROWS_AS(hecke_operator(theta_constant(3, 8), 2, 8), std::invalid_argument);  // wrong scale
}

TEST_CASE("series arithmetic: truncation and scale rules") {
  const QSeries a = eisenstein_series(4, 8);
  const QSeries b = eisenstein_series(6, 5);
  CHECK((a * b).order() == 5);
  CHECK((a + b).order() == 5);
  CHECK_THROWS_AS(a + theta_constant(3, 8), std::invalid_argument);
  CHECK_THROWS_AS(a.truncated(9), std::invalid_argument);

  // Dilation and projection invert each other.
  const QSeries up = a.dilated_to_quarter_nome();
  CHECK(up.var_scale() == 4);
  CHECK(up.projected_to_nome().truncated(8) == a);

  // Projection rejects series supported off the 4Z exponents.
  CHECK_THROWS_AS(theta_constant(2, 9).projected_to_nome(), std::domain_error);
}

TEST_CASE("json round trip keeps exact coefficients") {
  const QSeries e12 = eisenstein_series(12, 4);
  const nlohmann::json j = to_json(e12);
  CHECK(j.at("coeffs")[1].get<std::string>() == "65520/691");
  const QSeries back = qseries_from_json(j);
  CHECK(back == e12);
}
