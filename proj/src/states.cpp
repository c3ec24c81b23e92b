#include "morseband/states.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <string>

#include "morseband/errors.hpp"
#include "morseband/kernels.hpp"
#include "morseband/specfun.hpp"

namespace morseband::states {

namespace {

constexpr double kPi = std::numbers::pi;

void check_labels(int l, int n) {
  if (n < 1 || l < 0 || l > n - 1) {
    throw DomainError("assoc_bessel: need n >= 1 and 0 <= l <= n-1, got (" + std::to_string(l) +
                      ", " + std::to_string(n) + ")");
  }
}

}  // namespace

AssocBesselValue assoc_bessel_checked(int l, int n, double beta, double xi) {
  check_labels(l, n);
  if (!(beta > 0.0)) throw DomainError("assoc_bessel: beta must be > 0");
  if (!(xi > 0.0)) throw DomainError("assoc_bessel: xi must be > 0");
  const double lag = specfun::laguerre(n - l - 1, 2.0 * l + 1.0, beta / xi);
  if (lag == 0.0) return {0.0, false};
  const double ln_abs = l * std::log(beta) +
                        0.5 * (specfun::ln_gamma(n - l) - specfun::ln_gamma(n + l + 1.0)) -
                        (l + 1.0) * std::log(xi) + std::log(std::abs(lag));
  if (ln_abs < -745.0) return {0.0, true};
  if (ln_abs > 709.0) throw RangeError("assoc_bessel: value overflows");
  return {std::copysign(std::exp(ln_abs), lag), false};
}

double assoc_bessel(int l, int n, double beta, double xi) {
  return assoc_bessel_checked(l, n, beta, xi).value;
}

double assoc_bessel_rodrigues(int l, int n, double beta, double xi) {
  check_labels(l, n);
  if (!(beta > 0.0) || !(xi > 0.0)) throw DomainError("assoc_bessel_rodrigues: need beta, xi > 0");
  // power -> coefficient of xi^power, all multiplying e^{-beta/xi}
  std::map<int, double> poly{{2 * l, 1.0}};
  for (int d = 0; d < n + l; ++d) {
    std::map<int, double> next;
    for (const auto& [k, a] : poly) {
      if (k != 0) next[k - 1] += k * a;
      next[k - 2] += beta * a;
    }
    poly = std::move(next);
  }
  double sum = 0.0;
  for (const auto& [k, a] : poly) sum += a * std::pow(xi, k + n);
  const double sign = ((n - l - 1) % 2 == 0) ? 1.0 : -1.0;
  const double norm = std::exp(-(l + 1.0) * std::log(beta) -
                               0.5 * (specfun::ln_gamma(n + l + 1.0) + specfun::ln_gamma(n - l)));
  return sign * norm * sum;
}

double measure_weight(double x, const PhysParams& p) {
  const double t = p.wavenumber() * x;
  return std::exp(t - p.beta() * std::exp(-t));
}

double amplitude(int l, const PhysParams& p) {
  return std::sqrt((-p.e * p.B0 / (kPi * p.hbar * p.c)) * (2.0 * l + 1.0));
}

double eigen_radial(const QuantumNumbers& q, const PhysParams& p, double x) {
  return amplitude(q.l, p) * assoc_bessel(q.l, q.n, p.beta(), std::exp(p.wavenumber() * x));
}

Complex eigenfunction(const QuantumNumbers& q, const PhysParams& p, double x, double y) {
  return eigen_radial(q, p, x) * std::polar(1.0, -q.n * p.wavenumber() * y);
}

std::vector<double> band_weight(const GridSpec& grid, const PhysParams& p) {
  std::vector<double> w(grid.nx);
  for (int i = 0; i < grid.nx; ++i) w[i] = measure_weight(grid.x(i), p);
  return w;
}

SampledState wavefunction(const QuantumNumbers& q, const PhysParams& p, const GridSpec& grid) {
  p.validate();
  grid.validate();
  SampledState s(grid, band_weight(grid, p));
  s.labels = q;
  std::vector<Complex> phase(grid.ny);
  for (int j = 0; j < grid.ny; ++j) phase[j] = std::polar(1.0, -q.n * p.wavenumber() * grid.y(j));
  kernels::parallel::fill_rows(grid, s.values, [&](int i, std::span<Complex> row) {
    const double r = eigen_radial(q, p, grid.x(i));
    for (int j = 0; j < grid.ny; ++j) row[j] = r * phase[j];
  });
  return s;
}

double ode_residual(const QuantumNumbers& q, const PhysParams& p, std::span<const double> xi,
                    std::optional<double> energy) {
  p.validate();
  const double pi2 = kPi * kPi;
  const double E = energy.value_or(model::energy(q, p));
  // coefficients exactly as they appear in the xi-equation
  const double ebc = p.e * p.B0 * p.a0 * p.a0 / (2.0 * pi2 * p.hbar * p.c);
  const double ecoef = 2.0 * p.mu * p.a0 * p.a0 * E / (4.0 * pi2 * p.hbar * p.hbar);
  const int l = q.l;
  const int N = q.N();
  const double alpha = 2.0 * l + 1.0;
  const double beta = p.beta();
  const double c = std::exp(l * std::log(beta) +
                            0.5 * (specfun::ln_gamma(q.n - l) - specfun::ln_gamma(q.n + l + 1.0)));
  double worst = 0.0;
  for (double x : xi) {
    if (!(x > 0.0)) throw DomainError("ode_residual: xi samples must be > 0");
    const double u = beta / x;
    const double L = specfun::laguerre(N, alpha, u);
    const double Lu = specfun::laguerre_derivative(N, alpha, u, 1);
    const double Luu = specfun::laguerre_derivative(N, alpha, u, 2);
    const double g = std::pow(x, -l - 1.0);
    const double g1 = -(l + 1.0) * g / x;
    const double g2 = (l + 1.0) * (l + 2.0) * g / (x * x);
    // psi = c g(xi) L(beta/xi), du/dxi = -u/xi
    const double psi = c * g * L;
    const double d1 = c * (g1 * L - g * Lu * u / x);
    const double d2 = c * (g2 * L - 2.0 * g1 * Lu * u / x + g * (Luu * u * u + 2.0 * Lu * u) / (x * x));
    const double t1 = x * x * d2;
    const double t2 = (2.0 * x - ebc) * d1;
    const double t3 = -(q.n * q.n - 0.25 + ebc * q.n / x - ecoef) * psi;
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(t1 + t2 + t3) / scale);
  }
  return worst;
}

Complex landau_asym(const LandauParams& lp, const PhysParams& p, double x, double y) {
  if (lp.N < 0) throw DomainError("landau_asym: N must be >= 0");
  const double rc = LandauParams::r_c(p);
  const double s = (x - lp.x0(p)) / rc;
  const double ln_norm = -0.5 * (0.5 * std::log(kPi) + std::log(rc) + lp.N * std::log(2.0) +
                                 specfun::ln_gamma(lp.N + 1.0));
  const double radial = std::exp(ln_norm - 0.5 * s * s) * specfun::hermite(lp.N, s) / (2.0 * kPi);
  return radial * std::polar(1.0, -lp.k_y * y);
}

Complex landau_sym(const LandauParams& lp, const PhysParams& p, double x, double y) {
  if (lp.n < 0 || lp.l < 0) throw DomainError("landau_sym: n, l must be >= 0");
  const double rc = LandauParams::r_c(p);
  const double s = (x * x + y * y) / (2.0 * rc * rc);
  const double pref = std::sqrt(std::exp(specfun::ln_gamma(lp.n + 1.0) -
                                         specfun::ln_gamma(lp.n + lp.l + 1.0)) / kPi);
  const Complex zeta = Complex(x, y) / (std::numbers::sqrt2 * rc);
  Complex zl = 1.0;
  for (int k = 0; k < lp.l; ++k) zl *= zeta;
  return pref * zl * std::exp(-0.5 * s) / (std::numbers::sqrt2 * rc) *
         specfun::laguerre(lp.n, lp.l, s);
}

namespace {

template <class F>
SampledState flat_state(const GridSpec& grid, F&& f) {
  grid.validate();
  SampledState s(grid, std::vector<double>(grid.nx, 1.0));
  kernels::parallel::fill_rows(grid, s.values, [&](int i, std::span<Complex> row) {
    for (int j = 0; j < grid.ny; ++j) row[j] = f(grid.x(i), grid.y(j));
  });
  return s;
}

}  // namespace

SampledState landau_state_asym(const LandauParams& lp, const PhysParams& p, const GridSpec& grid) {
  return flat_state(grid, [&](double x, double y) { return landau_asym(lp, p, x, y); });
}

SampledState landau_state_sym(const LandauParams& lp, const PhysParams& p, const GridSpec& grid) {
  return flat_state(grid, [&](double x, double y) { return landau_sym(lp, p, x, y); });
}

void write_state_csv(std::ostream& os, const SampledState& s) {
  os << "x,y,re_psi,im_psi,density,w\n";
  char buf[160];
  for (int i = 0; i < s.grid.nx; ++i) {
    for (int j = 0; j < s.grid.ny; ++j) {
      const Complex v = s.at(i, j);
      std::snprintf(buf, sizeof buf, "%.16e,%.16e,%.16e,%.16e,%.16e,%.16e\n", s.grid.x(i),
                    s.grid.y(j), v.real(), v.imag(), std::norm(v), s.weight[i]);
      os << buf;
    }
  }
}

}  // namespace morseband::states
