#include <cmath>
#include <numbers>

#include "doctest.h"
#include "morseband/algebra.hpp"
#include "morseband/errors.hpp"
#include "morseband/quadrature.hpp"
#include "morseband/states.hpp"

using namespace morseband;

namespace {

constexpr double kPi = std::numbers::pi;

// L+- applied pointwise: x derivative by Richardson differences of the
// analytic eigenfunction, y derivative exact (psi ~ e^{-i n k y}).
struct PointLadder {
  PhysParams p;
  QuantumNumbers q;
  Complex raise(double x, double y) const {
    const double k = p.wavenumber();
    const auto f = [&](double xx) { return states::eigenfunction(q, p, xx, y); };
    const Complex psi = f(x);
    const Complex dx = quadrature::richardson_derivative(f, x, 1, 0.05 / k);
    const Complex dy = Complex(0.0, -q.n * k) * psi;
    const double c = p.e * p.B0 * p.a0 / (kPi * p.hbar * p.c);
    return std::polar(1.0 / k, -k * y) * (-dx + Complex(0.0, 1.0) * dy + c * std::exp(-k * x) * psi);
  }
  Complex lower(double x, double y) const {
    const double k = p.wavenumber();
    const auto f = [&](double xx) { return states::eigenfunction(q, p, xx, y); };
    const Complex dx = quadrature::richardson_derivative(f, x, 1, 0.05 / k);
    return std::polar(1.0 / k, k * y) * (dx + Complex(0.0, 1.0) * Complex(0.0, -q.n * k) * f(x));
  }
};

const GridSpec& test_grid() {
  static const GridSpec g = band_grid(PhysParams{}, 8192, 16);
  return g;
}

}  // namespace

TEST_CASE("pointwise ladder action on the analytic states") {
  for (const PhysParams& p : {PhysParams{}, PhysParams::cgs()}) {
    for (int n = 1; n <= 5; ++n) {
      for (int l = 0; l < n; ++l) {
        const PointLadder L{p, {l, n}};
        for (double s : {-0.1, 0.05, 0.3}) {
          const double x = s * p.a0, y = 0.37 * p.a0;
          const Complex up = std::sqrt((n + 1.0 + l) * (n - l)) * states::eigenfunction({l, n + 1}, p, x, y);
          CHECK(std::abs(L.raise(x, y) - up) <= 1e-8 * std::abs(up) + 1e-12 * std::abs(states::eigenfunction({l, n}, p, x, y)));
          const Complex down =
              n > l + 1 ? std::sqrt((n + l) * (n - l - 1.0)) * states::eigenfunction({l, n - 1}, p, x, y) : 0.0;
          CHECK(std::abs(L.lower(x, y) - down) <= 1e-8 * std::abs(states::eigenfunction({l, n}, p, x, y)));
        }
      }
    }
  }
}

TEST_CASE("grid operators: ladder matrix elements and annihilation") {
  const PhysParams p;
  const GridSpec& g = test_grid();
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto s = states::wavefunction({l, n}, p, g);
      const auto up = states::wavefunction({l, n + 1}, p, g);
      const double m = std::sqrt((n + 1.0 + l) * (n - l));
      CHECK(std::abs(quadrature::grid_inner_product(up, algebra::apply_Lplus(s, p)) - m) <= 1e-6 * m);
      CHECK(std::abs(quadrature::grid_inner_product(s, algebra::apply_Lminus(up, p)) - m) <= 1e-6 * m);
      CHECK(algebra::relative_residual(algebra::apply_L3(s, p), s, double(n)) <= 1e-10);
      if (n == l + 1) {
        CHECK(quadrature::weighted_norm(algebra::apply_Lminus(s, p)) <= 1e-6 * quadrature::weighted_norm(s));
      }
    }
  }
}

TEST_CASE("Hamiltonian and Casimir eigenvalues") {
  const PhysParams p;
  const GridSpec& g = test_grid();
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto s = states::wavefunction({l, n}, p, g);
      CHECK(algebra::apply_hamiltonian(s, p).residual_norm <= 1e-6);
      CHECK(algebra::apply_casimir(s, p).residual_norm <= 1e-6);
    }
  }
  // residuals need labels
  auto s = states::wavefunction({0, 1}, p, g);
  s.labels.reset();
  CHECK_THROWS_AS(algebra::apply_hamiltonian(s, p), DomainError);
  CHECK_THROWS_AS(algebra::apply_casimir(s, p), DomainError);
  // a wrong label is caught by the residual
  s.labels = QuantumNumbers(0, 2);
  CHECK(algebra::apply_hamiltonian(s, p).residual_norm > 0.1);
}

TEST_CASE("su(1,1) commutation relations") {
  const PhysParams p;
  const GridSpec& g = test_grid();
  const algebra::Operator Lp = [&](const SampledState& s) { return algebra::apply_Lplus(s, p); };
  const algebra::Operator Lm = [&](const SampledState& s) { return algebra::apply_Lminus(s, p); };
  const algebra::Operator L3 = [&](const SampledState& s) { return algebra::apply_L3(s, p); };
  const algebra::Operator H = [&](const SampledState& s) { return algebra::hamiltonian(s, p); };
  const algebra::Operator C = [&](const SampledState& s) { return algebra::casimir(s, p); };
  const auto norm = [](const SampledState& v) { return quadrature::weighted_norm(v); };
  for (QuantumNumbers q : {QuantumNumbers(0, 1), {1, 2}, {0, 3}, {2, 4}}) {
    const auto s = states::wavefunction(q, p, g);
    const double ns = norm(s);
    CHECK(norm(algebra::lincomb(1.0, algebra::commutator(Lp, Lm, s), 2.0, L3(s))) <= 1e-5 * ns);
    CHECK(norm(algebra::lincomb(1.0, algebra::commutator(L3, Lp, s), -1.0, Lp(s))) <= 1e-5 * ns);
    CHECK(norm(algebra::lincomb(1.0, algebra::commutator(L3, Lm, s), 1.0, Lm(s))) <= 1e-5 * ns);
    CHECK(norm(algebra::commutator(H, L3, s)) <= 1e-5 * norm(H(s)));
    CHECK(norm(algebra::commutator(H, C, s)) <= 1e-5 * norm(H(s)));
    // H mixes representations along L+, so [H, L+] does not vanish
    CHECK(norm(algebra::commutator(H, Lp, s)) > 0.01 * norm(H(s)));
  }
}

TEST_CASE("lincomb requires a shared grid") {
  const PhysParams p;
  const auto a = states::wavefunction({0, 1}, p, band_grid(p, 64, 8));
  const auto b = states::wavefunction({0, 1}, p, band_grid(p, 72, 8));
  CHECK_THROWS_AS(algebra::lincomb(1.0, a, 1.0, b), GridMismatchError);
}
