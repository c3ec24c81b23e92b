#include "morseband/moments.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "morseband/errors.hpp"
#include "morseband/quadrature.hpp"
#include "morseband/specfun.hpp"
#include "morseband/states.hpp"

namespace morseband::moments {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Richardson step in t = 2 pi x / a0
constexpr double kStepT = 0.05;

}  // namespace

MomentSet assemble(double mean_x, double mean_x2, Complex mean_p, Complex mean_p2, Complex mean_xp,
                   double hbar) {
  MomentSet m;
  m.mean_x = mean_x;
  m.mean_x2 = mean_x2;
  m.mean_p = mean_p;
  m.mean_p2 = mean_p2;
  m.mean_xp = mean_xp;
  m.sigma_xx = mean_x2 - mean_x * mean_x;
  m.sigma_pp = mean_p2 - mean_p * mean_p;
  // 1/2 <xp + px> with px = xp - i hbar
  m.sigma_xp = mean_xp - 0.5 * kI * hbar - mean_x * mean_p;
  const Complex d = m.sigma_xx * m.sigma_pp - m.sigma_xp * m.sigma_xp;
  m.delta = d.real();
  m.delta_imag = d.imag();
  return m;
}

double robertson_delta(const MomentSet& m) {
  return (m.sigma_xx * m.sigma_pp - m.sigma_xp * m.sigma_xp).real();
}

MomentSet moments_closed(const QuantumNumbers& q, const PhysParams& p) {
  p.validate();
  const int N = q.N();
  if (N < 0 || N > 2) throw DomainError("moments_closed: closed forms exist only for N = 0, 1, 2");
  const double l = q.l;
  const double K = p.a0 / (2.0 * kPi);
  const double hbar = p.hbar;
  const double lnb = std::log(p.beta());
  const double psi = specfun::digamma(2.0 * l + 1.0);
  auto zeta = [&](int k) { return specfun::trigamma(2.0 * l + k); };

  double shift_x = 0.0;
  double shift_xp = 0.0;
  double var = 0.0;
  if (N == 0) {
    var = zeta(1);
  } else if (N == 1) {
    shift_x = -1.0 / (2.0 * (l + 1.0));
    shift_xp = l / (2.0 * (l + 1.0) * (l + 1.0));
    var = l * (4.0 * l + 3.0) / (2.0 * (2.0 * l + 1.0) * (l + 1.0) * (l + 1.0)) +
          2.0 * (l + 1.0) * zeta(1) - 2.0 * (2.0 * l + 1.0) * zeta(2) + (2.0 * l + 1.0) * zeta(3);
  } else {
    shift_x = -(4.0 * l + 5.0) / (2.0 * (l + 1.0) * (2.0 * l + 3.0));
    shift_xp = l * (4.0 * l + 5.0) / (2.0 * (l + 1.0) * (l + 1.0) * (2.0 * l + 3.0));
    const double poly = 64.0 * std::pow(l, 5) + 344.0 * std::pow(l, 4) + 656.0 * std::pow(l, 3) +
                        516.0 * l * l + 125.0 * l - 13.0;
    const double den = 4.0 * (2.0 * l + 1.0) * (l + 2.0) * (l + 1.0) * (l + 1.0) *
                       (2.0 * l + 3.0) * (2.0 * l + 3.0);
    var = poly / den + (l + 1.0) * (2.0 * l + 3.0) * zeta(1) -
          2.0 * (2.0 * l + 1.0) * (2.0 * l + 3.0) * zeta(2) +
          2.0 * (2.0 * l + 1.0) * (3.0 * l + 4.0) * zeta(3) -
          2.0 * (2.0 * l + 1.0) * (2.0 * l + 3.0) * zeta(4) + (2.0 * l + 1.0) * (l + 2.0) * zeta(5);
  }
  const double mean_x = -K * (psi + shift_x - lnb);
  const double mean_x2 = mean_x * mean_x + K * K * var;
  const Complex mean_p = kI * hbar * (l + 1.0) / K;
  const Complex mean_xp = -kI * hbar * (l + 1.0) * (psi + shift_xp - lnb);
  return assemble(mean_x, mean_x2, mean_p, mean_p * mean_p, mean_xp, hbar);
}

MomentSet moments_quadrature(const QuantumNumbers& q, const PhysParams& p, const GridSpec& grid) {
  p.validate();
  grid.validate();
  const int l = q.l;
  const int N = q.N();
  const double alpha = 2.0 * l + 1.0;
  const double k = p.wavenumber();
  const double beta = p.beta();
  const double hbar = p.hbar;

  // y: periodic trapezoid of |e^{-i n k y}|^2
  double ycol = 0.0;
  for (int j = 0; j < grid.ny; ++j) ycol += std::norm(std::polar(1.0, -q.n * k * grid.y(j))) * grid.hy();

  // With u = beta e^{-t}, |psi|^2 w dx is proportional to u^{2l} e^{-u} R(u)^2 du, where
  // R(u, d) = e^{-(l+1) d} L_N(u e^{-d}) is B_{l,n} at t + d divided by u^{l+1}.
  auto R = [&](double u, double d) { return std::exp(-(l + 1.0) * d) * specfun::laguerre(N, alpha, u * std::exp(-d)); };
  auto x_of = [&](double u) { return (std::log(beta) - std::log(u)) / k; };
  auto dR = [&](double u, int order) {
    return quadrature::richardson_derivative([&](double d) { return Complex(R(u, d)); }, 0.0, order, kStepT)
        .real();
  };

  const double a = 2.0 * l;
  const double norm =
      ycol * quadrature::integrate_semi_infinite_u([&](double u) { return R(u, 0.0) * R(u, 0.0); }, a).value;
  quadrature::SemiInfiniteOptions opts;
  opts.abs_floor = norm;

  auto real_moment = [&](auto&& g) {
    return ycol * quadrature::integrate_semi_infinite_u([&](double u) { return R(u, 0.0) * R(u, 0.0) * g(u); }, a, opts).value / norm;
  };
  auto complex_moment = [&](auto&& g) {
    return ycol * quadrature::integrate_semi_infinite_u_complex(g, a, opts).value / norm;
  };

  const double mean_x = real_moment([&](double u) { return x_of(u); });
  const double mean_x2 = real_moment([&](double u) { const double x = x_of(u); return x * x; });
  // d/dx = k d/dt
  const Complex mean_p = complex_moment([&](double u) { return R(u, 0.0) * (-kI * hbar * k * dR(u, 1)); });
  const Complex mean_p2 = complex_moment([&](double u) { return R(u, 0.0) * (-hbar * hbar * k * k * dR(u, 2)); });
  const Complex mean_xp = complex_moment([&](double u) { return R(u, 0.0) * x_of(u) * (-kI * hbar * k * dR(u, 1)); });
  return assemble(mean_x, mean_x2, mean_p, mean_p2, mean_xp, hbar);
}

double delta_closed(int l, int N) {
  if (l < 0) throw DomainError("delta_closed: l must be >= 0");
  const double L = l;
  switch (N) {
    case 0:
      return 0.25;
    case 1: {
      const double r = (3.0 * L + 2.0) / (L + 1.0);
      return 0.25 * r * r;
    }
    case 2: {
      const double r = (10.0 * L * L + 19.0 * L + 8.0) / ((L + 1.0) * (2.0 * L + 3.0));
      return 0.25 * r * r;
    }
    default:
      throw DomainError("delta_closed: N must be 0, 1 or 2");
  }
}

std::pair<double, double> eq22_oracle(double nu, double mu, int j) {
  if (!(nu > 0.0) || !(mu > 0.0)) throw DomainError("eq22_oracle: need nu, mu > 0");
  if (j != 1 && j != 2) throw DomainError("eq22_oracle: j must be 1 or 2");
  const double lnmu = std::log(mu);
  // s = u / mu
  const auto r = quadrature::integrate_semi_infinite_u(
      [&](double u) { return std::pow(std::log(u) - lnmu, j); }, nu - 1.0);
  const double quad = r.value / std::pow(mu, nu);
  const double g = std::exp(specfun::ln_gamma(nu)) / std::pow(mu, nu);
  const double d = specfun::digamma(nu) - lnmu;
  const double closed = j == 1 ? g * d : g * (d * d + specfun::trigamma(nu));
  return {quad, closed};
}

MomentSet landau_moments(const LandauLabel& label, const PhysParams& p) {
  p.validate();
  states::LandauParams lp;
  lp.N = label.N;
  lp.n = label.n;
  lp.l = label.l;
  const double rc = states::LandauParams::r_c(p);
  const int extent = label.gauge == Gauge::asymmetric ? label.N : 2 * label.n + label.l;
  const double half = rc * (12.0 + 2.0 * std::sqrt(extent + 1.0));
  const GridSpec g = plane_grid(half, 257, 256);
  auto psi = [&](double x, double y) {
    return label.gauge == Gauge::asymmetric ? states::landau_asym(lp, p, x, y) : states::landau_sym(lp, p, x, y);
  };
  const double hbar = p.hbar;
  const double h = kStepT * rc;

  // per-row partial sums: norm, x, x^2, p, p^2, xp
  std::vector<std::array<Complex, 6>> rows(g.nx);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < g.nx; ++i) {
    const double x = g.x(i);
    const double wx = (i == 0 || i == g.nx - 1) ? 0.5 : 1.0;
    std::array<Complex, 6> acc{};
    for (int j = 0; j < g.ny; ++j) {
      const double y = g.y(j);
      auto along_x = [&](double xx) { return psi(xx, y); };
      const Complex v = psi(x, y);
      const Complex cv = std::conj(v);
      const Complex d1 = quadrature::richardson_derivative(along_x, x, 1, h);
      const Complex d2 = quadrature::richardson_derivative(along_x, x, 2, h);
      acc[0] += wx * cv * v;
      acc[1] += wx * cv * x * v;
      acc[2] += wx * cv * x * x * v;
      acc[3] += wx * cv * (-kI * hbar * d1);
      acc[4] += wx * cv * (-hbar * hbar * d2);
      acc[5] += wx * cv * x * (-kI * hbar * d1);
    }
    rows[i] = acc;
  }
  std::array<Complex, 6> tot{};
  for (const auto& r : rows) {
    for (int k = 0; k < 6; ++k) tot[k] += r[k];
  }
  const Complex n = tot[0];
  return assemble((tot[1] / n).real(), (tot[2] / n).real(), tot[3] / n, tot[4] / n, tot[5] / n, hbar);
}

double landau_delta(const LandauLabel& label, const PhysParams& p) {
  return landau_moments(label, p).delta / (p.hbar * p.hbar);
}

double landau_delta_reference(const LandauLabel& label) {
  if (label.gauge == Gauge::asymmetric) {
    switch (label.N) {
      case 0: return 0.25;
      case 1: return 2.25;
      case 2: return 6.25;
      default: break;
    }
  } else {
    if (label.n == 0) return 0.25;
    if (label.n == 1 && label.l == 0) return 2.25;
    if (label.n == 1 && label.l == 1) return 4.0;
  }
  throw DomainError("landau_delta_reference: no listed value for this state");
}

std::vector<std::pair<int, double>> uncertainty_limit_curve(int N, const std::vector<int>& l_list) {
  if (N != 1 && N != 2) throw DomainError("uncertainty_limit_curve: N must be 1 or 2");
  std::vector<std::pair<int, double>> out;
  out.reserve(l_list.size());
  for (int l : l_list) out.emplace_back(l, delta_closed(l, N));
  return out;
}

double uncertainty_limit_target(int N) {
  if (N < 0) throw DomainError("uncertainty_limit_target: N must be >= 0");
  return (N + 0.5) * (N + 0.5);
}

}  // namespace morseband::moments
