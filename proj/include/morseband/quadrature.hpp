#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "morseband/grid.hpp"
#include "morseband/kernels.hpp"

namespace morseband::quadrature {

template <class T>
struct IntegrationResultT {
  T value{};
  double error_estimate = 0.0;
  int evaluations = 0;
};

using IntegrationResult = IntegrationResultT<double>;
using ComplexIntegrationResult = IntegrationResultT<Complex>;

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;      // may underflow to 0 for far Laguerre nodes
  std::vector<double> log_weights;  // always finite
};

// Generalized Gauss-Laguerre rule for int_0^inf u^alpha e^{-u} f(u) du.
// Nodes come from the Jacobi matrix eigenvalues, refined by Newton on
// L_n^{(alpha)}; weights use the derivative formula in log form. Cached.
const GaussRule& gauss_laguerre(int order, double alpha = 0.0);

// Gauss-Legendre on [-1, 1]. Cached.
const GaussRule& gauss_legendre(int order);

inline constexpr int kLaguerreOrders[] = {64, 128, 256};

struct SemiInfiniteOptions {
  double rel_tol = 1e-8;
  // convergence is judged against max(|value|, abs_floor)
  double abs_floor = 0.0;
};

// int_0^inf u^a e^{-u} f(u) du for a > -1. The range is split at u = 1:
// u = e^{-s} on (0, 1] and u = 1 + v on [1, inf), each done by Gauss-Laguerre
// in s or v, so ln u factors and non-integer powers stay smooth. Orders
// 64/128/256; error_estimate = |I_256 - I_128|.
IntegrationResult integrate_semi_infinite_u(const std::function<double(double)>& f,
                                            double weight_exponent,
                                            SemiInfiniteOptions opts = {});
ComplexIntegrationResult integrate_semi_infinite_u_complex(
    const std::function<Complex(double)>& f, double weight_exponent, SemiInfiniteOptions opts = {});

struct RadialOptions {
  double rel_tol = 1e-13;
  double tail_tol = 1e-10;
  double panel_width = 0.5;
  int max_depth = 30;
};

// int_0^inf f(r) dr by adaptive composite Gauss-Legendre (20 vs 40 points per
// panel) on [0, r_max], plus an exponential tail estimate f(r_max)/kappa.
IntegrationResult integrate_radial(const std::function<double(double)>& f, double r_max,
                                   RadialOptions opts = {});

// Trapezoid in x times periodic trapezoid in y with the states' weight.
Complex grid_inner_product(const SampledState& a, const SampledState& b);

// sqrt(<a|a>) over interior rows (kMarginCells excluded at each x edge).
double weighted_norm(const SampledState& a, int margin = kMarginCells);

// 5-point O(h^4) derivative in x; spectral derivative in the periodic y.
SampledState fd_derivative(const SampledState& a, kernels::Axis axis, int order);

// Richardson-extrapolated central difference of a scalar function at x, with
// step h halved `levels` times. Used as the pointwise derivative oracle.
Complex richardson_derivative(const std::function<Complex(double)>& f, double x, int order,
                              double h, int levels = 4);

}  // namespace morseband::quadrature
