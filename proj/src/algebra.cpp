#include "morseband/algebra.hpp"

#include <cmath>
#include <numbers>

#include "morseband/errors.hpp"
#include "morseband/model.hpp"
#include "morseband/quadrature.hpp"

namespace morseband::algebra {

namespace {

using kernels::Axis;

// phase(j) = e^{i sign k y_j}
std::vector<Complex> y_phase(const GridSpec& g, double k, int sign) {
  std::vector<Complex> ph(g.ny);
  for (int j = 0; j < g.ny; ++j) ph[j] = std::polar(1.0, sign * k * g.y(j));
  return ph;
}

const QuantumNumbers& require_labels(const SampledState& s, const char* who) {
  if (!s.labels) throw DomainError(std::string(who) + ": state carries no (l, n) labels");
  return *s.labels;
}

}  // namespace

SampledState apply_Lplus(const SampledState& s, const PhysParams& p) {
  const SampledState dx = quadrature::fd_derivative(s, Axis::x, 1);
  const SampledState dy = quadrature::fd_derivative(s, Axis::y, 1);
  const double k = p.wavenumber();
  const double scale = p.a0 / (2.0 * std::numbers::pi);
  const double mult = p.e * p.B0 * p.a0 / (std::numbers::pi * p.hbar * p.c);
  const auto ph = y_phase(s.grid, k, -1);
  SampledState out = s.zeros_like();
  const int ny = s.grid.ny;
  kernels::parallel::fill_rows(s.grid, out.values, [&](int i, std::span<Complex> row) {
    const double m = mult * std::exp(-k * s.grid.x(i));
    for (int j = 0; j < ny; ++j) {
      const std::size_t id = static_cast<std::size_t>(i) * ny + j;
      row[j] = scale * ph[j] * (-dx.values[id] + Complex(0, 1) * dy.values[id] + m * s.values[id]);
    }
  });
  return out;
}

SampledState apply_Lminus(const SampledState& s, const PhysParams& p) {
  const SampledState dx = quadrature::fd_derivative(s, Axis::x, 1);
  const SampledState dy = quadrature::fd_derivative(s, Axis::y, 1);
  const double scale = p.a0 / (2.0 * std::numbers::pi);
  const auto ph = y_phase(s.grid, p.wavenumber(), +1);
  SampledState out = s.zeros_like();
  const int ny = s.grid.ny;
  kernels::parallel::fill_rows(s.grid, out.values, [&](int i, std::span<Complex> row) {
    for (int j = 0; j < ny; ++j) {
      const std::size_t id = static_cast<std::size_t>(i) * ny + j;
      row[j] = scale * ph[j] * (dx.values[id] + Complex(0, 1) * dy.values[id]);
    }
  });
  return out;
}

SampledState apply_L3(const SampledState& s, const PhysParams& p) {
  SampledState out = quadrature::fd_derivative(s, Axis::y, 1);
  const Complex f = Complex(0, 1) * (p.a0 / (2.0 * std::numbers::pi));
  for (Complex& v : out.values) v *= f;
  return out;
}

SampledState lincomb(Complex a, const SampledState& x, Complex b, const SampledState& y) {
  require_compatible(x, y);
  SampledState out = x.zeros_like();
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a * x.values[i] + b * y.values[i];
  return out;
}

double relative_residual(const SampledState& out, const SampledState& s, Complex lambda,
                         double scale) {
  const SampledState diff = lincomb(1.0, out, -lambda, s);
  return quadrature::weighted_norm(diff) / (scale * quadrature::weighted_norm(s));
}

SampledState casimir(const SampledState& s, const PhysParams& p) {
  const SampledState pm = apply_Lplus(apply_Lminus(s, p), p);
  const SampledState l3 = apply_L3(s, p);
  const SampledState l33 = apply_L3(l3, p);
  SampledState out = lincomb(1.0, pm, -1.0, l33);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += l3.values[i];
  return out;
}

SampledState hamiltonian(const SampledState& s, const PhysParams& p) {
  const SampledState pm = apply_Lplus(apply_Lminus(s, p), p);
  const SampledState l3 = apply_L3(s, p);
  const double unit = 2.0 * std::numbers::pi * std::numbers::pi * p.hbar * p.hbar / (p.mu * p.a0 * p.a0);
  SampledState out = s.zeros_like();
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = unit * (pm.values[i] + l3.values[i] - 0.25 * s.values[i]);
  }
  return out;
}

OperatorResult apply_casimir(const SampledState& s, const PhysParams& p) {
  const QuantumNumbers& q = require_labels(s, "apply_casimir");
  OperatorResult r{casimir(s, p), 0.0};
  r.residual_norm = relative_residual(r.output, s, -static_cast<double>(q.l) * (q.l + 1));
  return r;
}

OperatorResult apply_hamiltonian(const SampledState& s, const PhysParams& p) {
  const QuantumNumbers& q = require_labels(s, "apply_hamiltonian");
  const double E = model::energy(q, p);
  OperatorResult r{hamiltonian(s, p), 0.0};
  r.residual_norm = relative_residual(r.output, s, E, E);
  return r;
}

SampledState commutator(const Operator& A, const Operator& B, const SampledState& s) {
  return lincomb(1.0, A(B(s)), -1.0, B(A(s)));
}

}  // namespace morseband::algebra
