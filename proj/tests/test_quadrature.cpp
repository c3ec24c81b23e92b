#include <cmath>
#include <numbers>

#include "doctest.h"
#include "morseband/errors.hpp"
#include "morseband/quadrature.hpp"
#include "morseband/specfun.hpp"

using namespace morseband;
using namespace morseband::quadrature;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kGamma = 0.57721566490153286061;
}  // namespace

TEST_CASE("Gauss-Laguerre integrates u^k exactly") {
  for (double alpha : {0.0, 0.5, 2.0, 9.0}) {
    const auto& r = gauss_laguerre(16, alpha);
    CHECK(r.nodes.size() == 16);
    for (int k = 0; k <= 30; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      CHECK(s == doctest::Approx(std::tgamma(k + alpha + 1.0)).epsilon(1e-12));
    }
  }
  // high orders keep finite log weights even where the weight underflows
  const auto& big = gauss_laguerre(256, 0.0);
  for (double lw : big.log_weights) CHECK(std::isfinite(lw));
  CHECK(&gauss_laguerre(16, 2.0) == &gauss_laguerre(16, 2.0));
  CHECK_THROWS_AS(gauss_laguerre(0, 0.0), DomainError);
  CHECK_THROWS_AS(gauss_laguerre(4, -1.0), DomainError);
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const auto& r = gauss_legendre(20);
  for (int k = 0; k <= 39; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
    CHECK(s == doctest::Approx(k % 2 ? 0.0 : 2.0 / (k + 1)).epsilon(1e-14).scale(1.0));
  }
}

TEST_CASE("semi-infinite integrals with logarithms") {
  // int u^a e^{-u} ln u du = Gamma(a+1) psi(a+1)
  CHECK(integrate_semi_infinite_u([](double u) { return std::log(u); }, 0.0).value ==
        doctest::Approx(-kGamma).epsilon(1e-14));
  // int e^{-u} ln^2 u du = gamma^2 + pi^2/6
  CHECK(integrate_semi_infinite_u([](double u) { return std::log(u) * std::log(u); }, 0.0).value ==
        doctest::Approx(kGamma * kGamma + kPi * kPi / 6.0).epsilon(1e-14));
  for (double a : {0.5, 3.0, 6.25}) {
    const double want = std::tgamma(a + 1.0) * specfun::digamma(a + 1.0);
    CHECK(integrate_semi_infinite_u([](double u) { return std::log(u); }, a).value ==
          doctest::Approx(want).epsilon(1e-12));
  }
  // non-integer power near the origin: int u^{-1/2} e^{-u} du = sqrt(pi)
  CHECK(integrate_semi_infinite_u([](double) { return 1.0; }, -0.5).value == doctest::Approx(std::sqrt(kPi)));
  const auto c = integrate_semi_infinite_u_complex([](double u) { return std::polar(1.0, u); }, 0.0);
  CHECK(std::abs(c.value - Complex(0.5, 0.5)) < 1e-13);
  CHECK_THROWS_AS(integrate_semi_infinite_u([](double) { return 1.0; }, -1.0), DomainError);
  // an oscillation the rules cannot resolve is reported, not hidden
  CHECK_THROWS_AS(integrate_semi_infinite_u([](double u) { return std::cos(400.0 * u); }, 0.0), ConvergenceError);
}

TEST_CASE("radial integrals of K") {
  // int r^2 K_1(2r) dr = 1/4, int r^4 K_3(2r) dr = 3/2
  CHECK(integrate_radial([](double r) { return r > 0 ? r * r * specfun::bessel_k(1, 2 * r) : 0.0; }, 50.0).value ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(integrate_radial([](double r) { return r > 0 ? std::pow(r, 4) * specfun::bessel_k(3, 2 * r) : 0.0; }, 60.0)
            .value == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(integrate_radial([](double r) { return std::exp(-r); }, 40.0).value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(integrate_radial([](double) { return 1.0; }, 5.0), ConvergenceError);
}

TEST_CASE("grid derivatives and inner products") {
  GridSpec g{0.0, 2.0, 401, 0.0, 2.0 * kPi, 32};
  SampledState s(g, std::vector<double>(g.nx, 1.0));
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) s.at(i, j) = std::sin(g.x(i)) * std::exp(Complex(0, 3 * g.y(j)));
  const auto dx = fd_derivative(s, kernels::Axis::x, 1);
  const auto dyy = fd_derivative(s, kernels::Axis::y, 2);
  double ex = 0.0, ey = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      ex = std::max(ex, std::abs(dx.at(i, j) - std::cos(g.x(i)) * std::exp(Complex(0, 3 * g.y(j)))));
      ey = std::max(ey, std::abs(dyy.at(i, j) + 9.0 * s.at(i, j)));
    }
  }
  CHECK(ex < 1e-8);  // one-sided boundary stencils included
  CHECK(ey < 1e-11);
  // <s|s> = 2 pi int_0^2 sin^2, trapezoid at O(h^2)
  const double want = 2.0 * kPi * (1.0 - std::sin(4.0) / 4.0);
  CHECK(grid_inner_product(s, s).real() == doctest::Approx(want).epsilon(1e-4));
  SampledState other(g, std::vector<double>(g.nx, 2.0));
  CHECK_THROWS_AS(grid_inner_product(s, other), GridMismatchError);
}

TEST_CASE("Richardson derivative") {
  const auto f = [](double x) { return Complex(std::sin(x), std::exp(x)); };
  CHECK(std::abs(richardson_derivative(f, 0.7, 1, 0.1) - Complex(std::cos(0.7), std::exp(0.7))) < 1e-12);
  CHECK(std::abs(richardson_derivative(f, 0.7, 2, 0.1) - Complex(-std::sin(0.7), std::exp(0.7))) < 1e-10);
  CHECK_THROWS_AS(richardson_derivative(f, 0.0, 3, 0.1), DomainError);
}
