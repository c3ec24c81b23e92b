#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "morseband/errors.hpp"
#include "morseband/specfun.hpp"

using namespace morseband;
using namespace morseband::specfun;

namespace {

constexpr double kPi = std::numbers::pi;

// Ascending series in long double, fine for x <= 20.
double i_series(double nu, double x) {
  long double term = std::pow(0.5L * x, static_cast<long double>(nu)) / std::tgamma(static_cast<long double>(nu) + 1);
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= (0.25L * x * x) / (static_cast<long double>(k) * (k + nu));
    sum += term;
    if (term < 1e-22L * sum) break;
  }
  return static_cast<double>(sum);
}

// K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt; the trapezoid rule is
// spectrally accurate for this double-exponentially decaying integrand.
double k_integral(double nu, double x) {
  const double h = 0.02;
  double sum = 0.5 * std::exp(-x);
  for (int i = 1;; ++i) {
    const double t = i * h;
    const double arg = -x * std::cosh(t) + nu * t;
    if (arg < -745.0 && t > 1.0) break;
    sum += std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
  }
  return sum * h;
}

std::complex<double> j_series(double nu, std::complex<double> z) {
  std::complex<double> term = std::pow(0.5 * z, nu) / std::tgamma(nu + 1.0);
  std::complex<double> sum = term;
  for (int k = 1; k < 300; ++k) {
    term *= -(0.25 * z * z) / (k * (k + nu));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// sum_{k=0}^m (-1)^k C(m+alpha, m-k) u^k / k!
double laguerre_explicit(int m, double alpha, double u) {
  long double sum = 0.0L;
  for (int k = 0; k <= m; ++k) {
    const long double binom =
        std::exp(std::lgamma(m + alpha + 1.0L) - std::lgamma(m - k + 1.0L) - std::lgamma(alpha + k + 1.0L));
    sum += (k % 2 ? -1.0L : 1.0L) * binom * std::pow(static_cast<long double>(u), k) / std::tgamma(k + 1.0L);
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("ln_gamma against lgamma and exact factorials") {
  for (double x : {1e-3, 0.5, 1.0, 2.5, 10.0, 57.3, 1e3, 1e6}) {
    CHECK(ln_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
  CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(ln_gamma(11.0) == doctest::Approx(std::log(3628800.0)).epsilon(1e-14));
  CHECK_THROWS_AS(ln_gamma(0.0), DomainError);
  CHECK_THROWS_AS(ln_gamma(-1.5), DomainError);
}

TEST_CASE("digamma and trigamma special values and recurrences") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-14));
  CHECK(digamma(0.5) == doctest::Approx(-kEulerGamma - 2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(trigamma(1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
  CHECK(trigamma(0.5) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-13));
  for (double x : {1e-3, 0.3, 1.7, 8.0, 123.4}) {
    CHECK(digamma(x + 1.0) - digamma(x) == doctest::Approx(1.0 / x).epsilon(1e-12));
    CHECK(trigamma(x) - trigamma(x + 1.0) == doctest::Approx(1.0 / (x * x)).epsilon(1e-11));
  }
  // zeta(2, s) by direct summation plus the integral tail
  for (double s : {0.25, 1.0, 3.5}) {
    long double sum = 0.0L;
    const int K = 200000;
    for (int k = 0; k < K; ++k) sum += 1.0L / ((k + s) * (k + s));
    sum += 1.0L / (K + s - 0.5L);
    CHECK(trigamma(s) == doctest::Approx(static_cast<double>(sum)).epsilon(1e-11));
  }
}

TEST_CASE("laguerre matches the explicit sum and libstdc++") {
  for (int m : {0, 1, 2, 5, 12}) {
    for (double alpha : {0.0, 1.0, 3.0, 7.5}) {
      for (double u : {0.0, 0.1, 1.0, 4.0, 10.0}) {
        const double want = laguerre_explicit(m, alpha, u);
        CHECK(laguerre(m, alpha, u) == doctest::Approx(want).epsilon(1e-11).scale(1.0));
      }
    }
  }
  for (double u : {0.5, 3.0, 30.0}) {
    CHECK(laguerre(40, 5.0, u) == doctest::Approx(std::assoc_laguerre(40u, 5u, u)).epsilon(1e-10));
  }
  std::vector<double> seq(9);
  laguerre_sequence(2.0, 1.3, seq);
  for (int k = 0; k < 9; ++k) CHECK(seq[k] == doctest::Approx(laguerre(k, 2.0, 1.3)).epsilon(1e-15));
  // d/du L_m^(a) = -L_{m-1}^(a+1), checked by a central difference
  const double h = 1e-5;
  CHECK(laguerre_derivative(6, 1.0, 2.0) ==
        doctest::Approx((laguerre(6, 1.0, 2.0 + h) - laguerre(6, 1.0, 2.0 - h)) / (2 * h)).epsilon(1e-8));
  CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), DomainError);
}

TEST_CASE("hermite against libstdc++") {
  for (int n = 0; n <= 10; ++n) {
    for (double t : {-2.0, -0.3, 0.0, 1.1, 3.0}) {
      CHECK(hermite(n, t) == doctest::Approx(std::hermite(n, t)).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("bessel_i against its ascending series") {
  for (double nu : {0.0, 1.0, 2.5, 5.0, 11.0}) {
    for (double x : {1e-3, 0.4, 1.0, 5.0, 12.0, 20.0}) {
      CHECK(bessel_i(nu, x) == doctest::Approx(i_series(nu, x)).epsilon(1e-12));
    }
  }
  CHECK(bessel_i(0.0, 0.0) == 1.0);
  CHECK(bessel_i(3.0, 0.0) == 0.0);
  CHECK(bessel_i(1.0, 400.0, Scaling::exponential) ==
        doctest::Approx(std::cyl_bessel_i(1.0, 400.0) * std::exp(-400.0)).epsilon(1e-10));
  CHECK_THROWS_AS(bessel_i(1.0, 800.0), RangeError);
  CHECK_THROWS_AS(bessel_i(-1.0, 1.0), DomainError);
}

TEST_CASE("bessel_k against the cosh integral") {
  for (double nu : {0.0, 0.5, 1.0, 3.0, 7.0, 15.0}) {
    for (double x : {0.1, 0.7, 2.0, 9.0, 40.0}) {
      CHECK(bessel_k(nu, x) == doctest::Approx(k_integral(nu, x)).epsilon(1e-10));
    }
  }
  CHECK(bessel_k(-3.0, 1.2) == bessel_k(3.0, 1.2));
  CHECK(bessel_k(0.5, 2.0) == doctest::Approx(std::sqrt(kPi / 4.0) * std::exp(-2.0)).epsilon(1e-13));
  CHECK(bessel_k(2.0, 500.0, Scaling::exponential) ==
        doctest::Approx(k_integral(2.0, 500.0) * std::exp(500.0)).epsilon(1e-9));
  CHECK_THROWS_AS(bessel_k(1.0, 0.0), DomainError);
}

TEST_CASE("bessel_j for real and complex arguments") {
  for (double nu : {0.0, 1.0, 3.0, 4.5}) {
    for (double x : {0.2, 1.0, 6.0, 15.0}) {
      CHECK(bessel_j(nu, x).real() == doctest::Approx(std::cyl_bessel_j(nu, x)).epsilon(1e-9).scale(0.1));
      CHECK(std::abs(bessel_j(nu, x).imag()) < 1e-14);
    }
  }
  for (std::complex<double> z : {std::complex<double>(1.0, 1.0), {-2.0, 0.5}, {0.3, -4.0}, {5.0, 3.0}}) {
    for (double nu : {1.0, 3.0, 5.0}) {
      const auto want = j_series(nu, z);
      CHECK(std::abs(bessel_j(nu, z) - want) <= 1e-11 * std::max(1.0, std::abs(want)));
    }
  }
  // J_nu(ix) = i^nu I_nu(x)
  CHECK(std::abs(bessel_j(3.0, {0.0, 2.0}) - std::complex<double>(0.0, -1.0) * bessel_i(3.0, 2.0)) < 1e-13);
  CHECK_THROWS_AS(bessel_j(1.0, 2e3), DomainError);
  CHECK_THROWS_AS(bessel_j(-1.0, 1.0), DomainError);
  const auto est = bessel_j_estimate(1.0, {3.0, 2.0});
  CHECK(est.error_estimate <= 1e-9 * est.envelope);
}

TEST_CASE("modified Bessel Wronskian and recurrence") {
  for (double x : {0.1, 1.0, 10.0, 50.0}) {
    for (int nu = 0; nu <= 15; ++nu) {
      const double w = bessel_i(nu, x) * bessel_k(nu + 1, x) + bessel_i(nu + 1, x) * bessel_k(nu, x);
      CHECK(std::abs(w - 1.0 / x) <= 1e-10 / x);
    }
  }
}
