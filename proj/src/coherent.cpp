#include "morseband/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "morseband/errors.hpp"
#include "morseband/kernels.hpp"
#include "morseband/quadrature.hpp"
#include "morseband/specfun.hpp"
#include "morseband/states.hpp"

namespace morseband::coherent {

namespace {

using specfun::Scaling;
constexpr double kPi = std::numbers::pi;
constexpr double kTinyR = 1e-150;

// ln I_nu(x), falling back to the leading series term where the scaled value underflows
double ln_bessel_i(double nu, double x) {
  const double scaled = specfun::bessel_i(nu, x, Scaling::exponential);
  if (scaled > 0.0) return std::log(scaled) + x;
  return nu * std::log(0.5 * x) - specfun::ln_gamma(nu + 1.0);
}

// ln |c_N| without the N-dependent part: (l + 1/2) ln r - 1/2 ln I_{2l+1}(2r)
double ln_prefactor(int l, double r) {
  return (l + 0.5) * std::log(r) - 0.5 * ln_bessel_i(2.0 * l + 1.0, 2.0 * r);
}

double ln_coefficient_tail(int l, int N, double r) {
  return N * std::log(r) - 0.5 * (specfun::ln_gamma(N + 1.0) + specfun::ln_gamma(2.0 * l + N + 2.0));
}

}  // namespace

void CoherentSpec::validate() const {
  if (l < 0) throw DomainError("CoherentSpec: l must be >= 0");
  if (truncation < 1) throw DomainError("CoherentSpec: truncation must be >= 1");
  if (!std::isfinite(Z.real()) || !std::isfinite(Z.imag())) throw DomainError("CoherentSpec: Z not finite");
}

CoherentSpec CoherentSpec::make(int l, Complex Z) {
  CoherentSpec s;
  s.l = l;
  s.Z = Z;
  const double r = std::abs(Z);
  s.truncation = std::max(30, static_cast<int>(std::ceil(6.0 * r)) + 2 * l);
  s.validate();
  if (r < kTinyR) return s;
  double largest = -INFINITY;
  for (int N = 0; N <= s.truncation; ++N) largest = std::max(largest, ln_coefficient_tail(l, N, r));
  while (ln_coefficient_tail(l, s.truncation + 1, r) - largest > std::log(1e-14)) {
    ++s.truncation;
    largest = std::max(largest, ln_coefficient_tail(l, s.truncation, r));
  }
  return s;
}

std::vector<Complex> bg_coefficients(const CoherentSpec& spec) {
  spec.validate();
  std::vector<Complex> c(spec.truncation + 1, 0.0);
  const double r = std::abs(spec.Z);
  if (r < kTinyR) {
    c[0] = 1.0;
    return c;
  }
  if (2.0 * r > 700.0) throw RangeError("bg_coefficients: |Z| beyond the scaled Bessel range");
  const double phi = std::arg(spec.Z);
  const double pre = ln_prefactor(spec.l, r);
  for (int N = 0; N <= spec.truncation; ++N) {
    c[N] = std::polar(std::exp(pre + ln_coefficient_tail(spec.l, N, r)), N * phi);
  }
  return c;
}

SampledState bg_state_series(const CoherentSpec& spec, const PhysParams& p, const GridSpec& grid) {
  p.validate();
  grid.validate();
  const auto c = bg_coefficients(spec);
  const int l = spec.l;
  const int T = spec.truncation;
  const double k = p.wavenumber();
  const double beta = p.beta();
  const double amp = states::amplitude(l, p);
  std::vector<double> ln_norm(T + 1);
  for (int N = 0; N <= T; ++N) {
    ln_norm[N] = l * std::log(beta) + 0.5 * (specfun::ln_gamma(N + 1.0) - specfun::ln_gamma(2.0 * l + N + 2.0));
  }
  std::vector<Complex> z(grid.ny), lead(grid.ny);
  for (int j = 0; j < grid.ny; ++j) {
    z[j] = std::polar(1.0, -k * grid.y(j));
    lead[j] = std::polar(1.0, -(l + 1.0) * k * grid.y(j));
  }

  SampledState s(grid, states::band_weight(grid, p));
  kernels::parallel::fill_rows(grid, s.values, [&](int i, std::span<Complex> row) {
    const double t = k * grid.x(i);
    const double u = beta * std::exp(-t);
    std::vector<double> lag(T + 1);
    specfun::laguerre_sequence(2.0 * l + 1.0, u, lag);
    std::vector<Complex> b(T + 1);
    for (int N = 0; N <= T; ++N) b[N] = amp * c[N] * std::exp(ln_norm[N] - (l + 1.0) * t) * lag[N];
    for (int j = 0; j < grid.ny; ++j) {
      Complex acc = b[T];
      for (int N = T - 1; N >= 0; --N) acc = acc * z[j] + b[N];
      row[j] = lead[j] * acc;
    }
  });
  return s;
}

SampledState bg_state_closed(const CoherentSpec& spec, const PhysParams& p, const GridSpec& grid,
                             BranchPolicy policy, ClosedFormDiagnostics* diag) {
  spec.validate();
  p.validate();
  grid.validate();
  const int l = spec.l;
  const double r = std::abs(spec.Z);
  if (r < kTinyR) {
    SampledState s = states::wavefunction(QuantumNumbers::from_level(l, 0), p, grid);
    s.labels.reset();
    return s;
  }
  const double k = p.wavenumber();
  const double beta = p.beta();
  const double nu = 2.0 * l + 1.0;
  const Complex Z = spec.Z;
  const double pref = std::sqrt(2.0 * kPi * nu) / p.a0 /
                      std::sqrt(specfun::bessel_i(nu, 2.0 * r, Scaling::exponential));
  // (|Z|/Z)^{l+1/2} on the principal branch
  const Complex zphase = std::polar(1.0, -(l + 0.5) * std::arg(Z));
  const Complex sqrtZ = std::sqrt(Z);
  const double sqrt_beta = std::sqrt(beta);

  SampledState s(grid, states::band_weight(grid, p));
  std::vector<long> flips(grid.nx, 0);
  kernels::parallel::fill_rows(grid, s.values, [&](int i, std::span<Complex> row) {
    const double t = k * grid.x(i);
    for (int j = 0; j < grid.ny; ++j) {
      const double theta = k * grid.y(j);
      const Complex half = std::exp(Complex(-0.5 * t, -0.5 * theta));
      const Complex w_factored = 2.0 * sqrt_beta * sqrtZ * half;
      const Complex w_principal = 2.0 * std::sqrt(beta * Z * half * half);
      if ((w_factored * std::conj(w_principal)).real() < 0.0) ++flips[i];
      const Complex w = policy == BranchPolicy::factored ? w_factored : w_principal;
      // 1/sqrt(I(2r)) = e^{-r}/sqrt(scaled I); fold e^{-r} into the exponent
      const Complex expo = Complex(-0.5 * t, -0.5 * theta) + Z * std::polar(1.0, -theta) - r;
      row[j] = pref * std::exp(expo) * zphase * specfun::bessel_j(nu, w);
    }
  });
  if (diag) {
    diag->branch_flips = 0;
    for (long f : flips) diag->branch_flips += f;
  }
  return s;
}

double weighted_sup_distance(const SampledState& a, const SampledState& b, int margin) {
  require_compatible(a, b);
  double num = 0.0;
  double den = 0.0;
  for (int i = margin; i < a.grid.nx - margin; ++i) {
    const double sw = std::sqrt(a.weight[i]);
    for (int j = 0; j < a.grid.ny; ++j) {
      num = std::max(num, std::abs(a.at(i, j) - b.at(i, j)) * sw);
      den = std::max(den, std::abs(b.at(i, j)) * sw);
    }
  }
  return den > 0.0 ? num / den : num;
}

double bg_measure_density(int l, double r) {
  if (!(r > 0.0)) throw DomainError("bg_measure_density: r must be > 0");
  const double nu = 2.0 * l + 1.0;
  return (2.0 / kPi) * r * specfun::bessel_i(nu, 2.0 * r, Scaling::exponential) *
         specfun::bessel_k(nu, 2.0 * r, Scaling::exponential);
}

double radial_moment(int l, int N) {
  const double nu = 2.0 * l + 1.0;
  auto f = [&](double r) {
    if (r <= 0.0) return 0.0;
    return std::exp((2.0 * l + 2.0 * N + 2.0) * std::log(r) - 2.0 * r +
                    std::log(specfun::bessel_k(nu, 2.0 * r, Scaling::exponential)));
  };
  return quadrature::integrate_radial(f, default_r_max(l)).value;
}

double radial_moment_closed(int l, int N) {
  return 0.25 * std::exp(specfun::ln_gamma(N + 1.0) + specfun::ln_gamma(2.0 * l + N + 2.0));
}

IdentityCheck identity_resolution_check(int l, int n_max) {
  if (l < 0 || n_max < 0 || n_max > 8) throw DomainError("identity_resolution_check: need l >= 0, 0 <= n_max <= 8");
  constexpr int kAngles = 64;
  const double nu = 2.0 * l + 1.0;
  IdentityCheck out;
  out.deviation.assign(n_max + 1, std::vector<double>(n_max + 1, 0.0));
  for (int N = 0; N <= n_max; ++N) {
    for (int M = 0; M <= n_max; ++M) {
      double angular = 0.0;
      for (int a = 0; a < kAngles; ++a) {
        angular += std::cos((M - N) * 2.0 * kPi * a / kAngles) * (2.0 * kPi / kAngles);
      }
      // density(r) |c_N(r)| |c_M(r)|; the I factors cancel only analytically
      auto f = [&](double r) {
        if (r <= 0.0) return 0.0;
        const double ln_density = std::log(2.0 / kPi) + std::log(r) +
                                  std::log(specfun::bessel_i(nu, 2.0 * r, Scaling::exponential)) +
                                  std::log(specfun::bessel_k(nu, 2.0 * r, Scaling::exponential));
        const double pre = ln_prefactor(l, r);
        return std::exp(ln_density + 2.0 * pre + ln_coefficient_tail(l, N, r) +
                        ln_coefficient_tail(l, M, r));
      };
      const double radial = quadrature::integrate_radial(f, default_r_max(l)).value;
      out.deviation[N][M] = angular * radial - (N == M ? 1.0 : 0.0);
      out.max_deviation = std::max(out.max_deviation, std::abs(out.deviation[N][M]));
    }
    out.radial.push_back(radial_moment(l, N));
    out.radial_expected.push_back(radial_moment_closed(l, N));
    out.max_radial_rel_error = std::max(
        out.max_radial_rel_error, std::abs(out.radial.back() / out.radial_expected.back() - 1.0));
  }
  return out;
}

}  // namespace morseband::coherent
