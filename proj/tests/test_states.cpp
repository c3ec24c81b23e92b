#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "morseband/errors.hpp"
#include "morseband/quadrature.hpp"
#include "morseband/specfun.hpp"
#include "morseband/states.hpp"

using namespace morseband;

namespace {

constexpr double kPi = std::numbers::pi;

// radial <l,n|l2,n> by a fine trapezoid in t = kx over [-8, 60]: the integrand decays
// double-exponentially on the left and exponentially on the right, and the y
// integral contributes a0.
double overlap_trapezoid(int l, int l2, int n, const PhysParams& p) {
  const double k = p.wavenumber();
  const double h = 0.004;
  double sum = 0.0;
  for (double t = -8.0; t <= 60.0; t += h) {
    const double x = t / k;
    sum += states::eigen_radial({l, n}, p, x) * states::eigen_radial({l2, n}, p, x) * states::measure_weight(x, p);
  }
  return sum * h / k * p.a0;
}

}  // namespace

TEST_CASE("eigenstates are orthonormal on the band grid") {
  const PhysParams p;
  const GridSpec g = band_grid(p, 8192, 16);
  std::vector<SampledState> basis;
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l) basis.push_back(states::wavefunction({l, n}, p, g));
  double worst = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      worst = std::max(worst, std::abs(quadrature::grid_inner_product(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)));
  CHECK(worst <= 1e-8);
}

// Different n are orthogonal through e^{-inky}; at fixed n the radial parts
// for different l must be orthogonal on their own.
TEST_CASE("radial orthonormality by an independent trapezoid") {
  const PhysParams p;
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l)
      for (int l2 = 0; l2 < n; ++l2)
        CHECK(overlap_trapezoid(l, l2, n, p) == doctest::Approx(l == l2 ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
}

TEST_CASE("lowest state closed form") {
  const PhysParams p;
  // B_{0,1}(xi) = 1/xi, so |psi_{0,1}|^2 = (-e B0 / pi hbar c) e^{-4 pi x / a0}
  for (double x : {-2.0, 0.0, 0.7, 3.0}) {
    const Complex v = states::eigenfunction({0, 1}, p, x, 0.4);
    CHECK(std::norm(v) == doctest::Approx(std::exp(-4 * kPi * x / p.a0) / kPi).epsilon(1e-14));
  }
  const PhysParams c = PhysParams::cgs();
  const double x = 0.3 * c.a0;
  CHECK(std::norm(states::eigenfunction({0, 1}, c, x, 0.0)) ==
        doctest::Approx(-c.e * c.B0 / (kPi * c.hbar * c.c) * std::exp(-4 * kPi * x / c.a0)).epsilon(1e-12));
}

TEST_CASE("xi equation with independently differentiated B") {
  const PhysParams p;
  const double b = p.beta();
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n; ++l) {
      const double prod = (2 * n - 2 * l - 1) * (2 * n + 2 * l + 1);
      for (double xi : {0.7, 1.3, 4.0}) {
        const auto f = [&](double z) { return Complex(states::assoc_bessel(l, n, b, z), 0.0); };
        const double d1 = quadrature::richardson_derivative(f, xi, 1, 0.05).real();
        const double d2 = quadrature::richardson_derivative(f, xi, 2, 0.05).real();
        const double B = f(xi).real();
        const double t1 = xi * xi * d2, t2 = (2 * xi + b) * d1, t3 = -(n * n - 0.25 - b * n / xi - prod / 4.0) * B;
        CHECK(std::abs(t1 + t2 + t3) <= 1e-7 * std::max({std::abs(t1), std::abs(t2), std::abs(t3)}));
      }
    }
  }
  const double xs[] = {0.5, 1.0, 2.0, 5.0};
  CHECK(states::ode_residual({2, 4}, p, xs) <= 1e-10);
  CHECK(states::ode_residual({2, 4}, p, xs, 1.01 * model::energy({2, 4}, p)) > 1e-3);
}

TEST_CASE("Rodrigues form and large-l underflow") {
  const double b = 2.0;
  for (int n = 1; n <= 5; ++n)
    for (int l = 0; l < n; ++l)
      for (double xi : {0.4, 1.0, 3.0}) {
        const double a = states::assoc_bessel(l, n, b, xi);
        CHECK(states::assoc_bessel_rodrigues(l, n, b, xi) == doctest::Approx(a).epsilon(1e-10).scale(1e-12));
      }
  const auto big = states::assoc_bessel_checked(300, 301, b, 1e3);
  CHECK(big.underflow);
  CHECK(big.value == 0.0);
  CHECK(std::isfinite(states::assoc_bessel(150, 152, b, 2.0)));
  CHECK_THROWS_AS(states::assoc_bessel(2, 2, b, 1.0), DomainError);
  CHECK_THROWS_AS(states::assoc_bessel(0, 1, b, -1.0), DomainError);
}

TEST_CASE("density is independent of y") {
  const PhysParams p;
  for (double x : {-1.0, 0.5, 2.0}) {
    const double d0 = std::norm(states::eigenfunction({1, 4}, p, x, 0.0));
    for (double y : {-3.0, 0.1, 2.9}) CHECK(std::norm(states::eigenfunction({1, 4}, p, x, y)) == doctest::Approx(d0));
  }
}

TEST_CASE("uniform-field states are normalized") {
  const PhysParams p;
  const GridSpec g = plane_grid(14.0, 281, 280);
  const auto check = [](const SampledState& s) {
    CHECK(quadrature::grid_inner_product(s, s).real() == doctest::Approx(1.0).epsilon(1e-9));
  };
  // asymmetric: plane wave in y with a 1/(2 pi) prefactor, so the x profile integrates to 1/(4 pi^2)
  for (int n = 0; n <= 2; ++n)
    for (int l = 0; l <= 2; ++l) check(states::landau_state_sym({0, n, l, 0.0}, p, g));
  const auto a0 = states::landau_state_asym({2, 0, 0, 0.5}, p, g);
  double col = 0.0;
  for (int i = 0; i < g.nx; ++i) col += std::norm(a0.at(i, 0)) * g.hx();
  CHECK(col * 4 * kPi * kPi == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("state CSV") {
  const PhysParams p;
  const GridSpec g = band_grid(p, 8, 8);
  std::ostringstream os;
  states::write_state_csv(os, states::wavefunction({0, 1}, p, g));
  const std::string text = os.str();
  CHECK(text.rfind("x,y,re_psi,im_psi,density,w\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 65);
}
