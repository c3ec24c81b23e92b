#include <cmath>
#include <numbers>

#include "doctest.h"
#include "morseband/algebra.hpp"
#include "morseband/coherent.hpp"
#include "morseband/errors.hpp"
#include "morseband/quadrature.hpp"
#include "morseband/states.hpp"

using namespace morseband;
using coherent::CoherentSpec;

namespace {

constexpr double kPi = std::numbers::pi;

// c_N straight from the definition with libstdc++ Bessel I
Complex coefficient(int l, Complex Z, int N) {
  const double r = std::abs(Z);
  const double norm = std::pow(r, l + 0.5) / std::sqrt(std::cyl_bessel_i(2.0 * l + 1.0, 2.0 * r));
  return norm * std::pow(Z, N) / std::sqrt(std::tgamma(N + 1.0) * std::tgamma(2.0 * l + N + 2.0));
}

// sum_N c_N psi_{l,l+N+1}(x, y), pointwise; `mag` gets sum_N |term| since
// the terms cancel heavily far left of the band
Complex pointwise_series(int l, Complex Z, int truncation, const PhysParams& p, double x, double y, double& mag) {
  Complex s = 0.0;
  mag = 0.0;
  for (int N = 0; N <= truncation; ++N) {
    const Complex term = coefficient(l, Z, N) * states::eigenfunction({l, l + N + 1}, p, x, y);
    s += term;
    mag += std::abs(term);
  }
  return s;
}

const GridSpec& grid() {
  static const GridSpec g = band_grid(PhysParams{}, 8192, 64);
  return g;
}

}  // namespace

TEST_CASE("coefficients") {
  for (int l : {0, 1, 3}) {
    for (Complex Z : {Complex(1.0, 0.0), std::polar(0.5, kPi / 3), Complex(-2.0, 1.5)}) {
      const auto spec = CoherentSpec::make(l, Z);
      const auto c = coherent::bg_coefficients(spec);
      double sum = 0.0;
      for (std::size_t N = 0; N < c.size(); ++N) {
        sum += std::norm(c[N]);
        if (N <= 20) CHECK(std::abs(c[N] - coefficient(l, Z, int(N))) <= 1e-13);
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  const auto zero = coherent::bg_coefficients(CoherentSpec::make(2, 0.0));
  CHECK(zero[0] == Complex(1.0, 0.0));
  CHECK(std::abs(zero[1]) == 0.0);
  CHECK(CoherentSpec::make(0, 30.0).truncation > 30);
  CHECK_THROWS_AS(coherent::bg_coefficients(CoherentSpec::make(0, 400.0)), RangeError);
  CHECK_THROWS_AS(CoherentSpec::make(-1, 1.0), DomainError);
}

TEST_CASE("series state matches the pointwise superposition") {
  const PhysParams p;
  const GridSpec& g = grid();
  const Complex Z(-1.0, 0.8);
  const auto spec = CoherentSpec::make(1, Z);
  const auto s = coherent::bg_state_series(spec, p, g);
  for (int i : {200, 2000, 5000, 7000})
    for (int j : {0, 17, 50}) {
      double mag = 0.0;
      const Complex want = pointwise_series(1, Z, spec.truncation, p, g.x(i), g.y(j), mag);
      CHECK(std::abs(s.at(i, j) - want) <= 1e-13 * mag);
    }
}

TEST_CASE("closed form agrees with the series on the factored branch") {
  const PhysParams p;
  const GridSpec& g = grid();
  for (int l = 0; l <= 2; ++l) {
    for (Complex Z : {Complex(1.0, 0.0), std::polar(0.5, kPi / 3), Complex(-2.5, 1.0), Complex(0.0, -2.5)}) {
      const auto spec = CoherentSpec::make(l, Z);
      const auto series = coherent::bg_state_series(spec, p, g);
      CHECK(coherent::weighted_sup_distance(coherent::bg_state_closed(spec, p, g), series) <= 1e-7);
      CHECK(std::abs(quadrature::grid_inner_product(series, series) - 1.0) <= 1e-7);
      CHECK(algebra::relative_residual(algebra::apply_Lminus(series, p), series, Z) <= 1e-5);
    }
  }
  // taking the principal root of the whole product picks the wrong sheet
  coherent::ClosedFormDiagnostics diag;
  const auto spec = CoherentSpec::make(1, Complex(-2.5, 1.0));
  const auto principal = coherent::bg_state_closed(spec, p, g, coherent::BranchPolicy::principal, &diag);
  CHECK(diag.branch_flips > 0);
  CHECK(coherent::weighted_sup_distance(principal, coherent::bg_state_series(spec, p, g)) > 0.1);
}

TEST_CASE("Z = 0 is the lowest state") {
  const PhysParams p;
  const GridSpec g = band_grid(p, 512, 16);
  const auto closed = coherent::bg_state_closed(CoherentSpec::make(2, 0.0), p, g);
  const auto lowest = states::wavefunction({2, 3}, p, g);
  for (std::size_t i = 0; i < closed.values.size(); ++i) CHECK(std::abs(closed.values[i] - lowest.values[i]) <= 1e-12);
  const auto series = coherent::bg_state_series(CoherentSpec::make(2, 0.0), p, g);
  for (std::size_t i = 0; i < series.values.size(); ++i) CHECK(std::abs(series.values[i] - lowest.values[i]) <= 1e-12);
}

TEST_CASE("measure density and radial moments") {
  for (int l : {0, 1, 4}) {
    for (double r : {0.1, 1.0, 7.5, 40.0}) {
      const double want = 2.0 / kPi * r * std::cyl_bessel_i(2.0 * l + 1, 2 * r) * std::cyl_bessel_k(2.0 * l + 1, 2 * r);
      CHECK(coherent::bg_measure_density(l, r) == doctest::Approx(want).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(coherent::bg_measure_density(0, 0.0), DomainError);
  for (int l = 0; l <= 2; ++l)
    for (int N = 0; N <= 4; ++N) {
      const double closed = 0.25 * std::tgamma(N + 1.0) * std::tgamma(2.0 * l + N + 2.0);
      CHECK(coherent::radial_moment_closed(l, N) == doctest::Approx(closed).epsilon(1e-14));
      CHECK(coherent::radial_moment(l, N) == doctest::Approx(closed).epsilon(1e-8));
    }
}

TEST_CASE("resolution of identity") {
  for (int l = 0; l <= 2; ++l) {
    const auto chk = coherent::identity_resolution_check(l, 4);
    CHECK(chk.max_deviation <= 1e-6);
    CHECK(chk.max_radial_rel_error <= 1e-8);
    CHECK(chk.deviation.size() == 5);
  }
  CHECK_THROWS_AS(coherent::identity_resolution_check(0, 9), DomainError);
}
