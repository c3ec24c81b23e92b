#pragma once

// Expectation values of x and p_x = -i hbar d/dx on band eigenstates, the
// Schrodinger-Robertson combination Delta = s_xx s_pp - s_xp^2, and the
// uniform-field comparison values.
//
// Moments are complex: <p_x> on |l,n> comes out purely imaginary under the
// band measure, and only Delta is asserted real.

#include <utility>
#include <vector>

#include "morseband/grid.hpp"
#include "morseband/model.hpp"

namespace morseband::moments {

struct MomentSet {
  double mean_x = 0.0;
  double mean_x2 = 0.0;
  Complex mean_p = 0.0;
  Complex mean_p2 = 0.0;
  Complex mean_xp = 0.0;  // <x p_x>, p applied first
  Complex sigma_xx = 0.0;
  Complex sigma_pp = 0.0;
  Complex sigma_xp = 0.0;  // <xp> - i hbar/2 - <x><p>
  double delta = 0.0;
  double delta_imag = 0.0;  // Im(s_xx s_pp - s_xp^2), kept for the reality check
};

// Fills the sigmas and Delta from the five raw moments.
MomentSet assemble(double mean_x, double mean_x2, Complex mean_p, Complex mean_p2, Complex mean_xp,
                   double hbar);

// Closed forms for N = n - l - 1 in {0, 1, 2}.
MomentSet moments_closed(const QuantumNumbers& q, const PhysParams& p);

// Quadrature: x integrals as u-split Gauss-Laguerre, the periodic y integral
// by trapezoid on grid.ny points, d/dx by Richardson-extrapolated central
// differences (step 0.05 in 2 pi x / a0). Moments are divided by <psi|psi>.
MomentSet moments_quadrature(const QuantumNumbers& q, const PhysParams& p, const GridSpec& grid);

double robertson_delta(const MomentSet& m);

// Delta_{l,l+N+1} / hbar^2 for N in {0, 1, 2}
double delta_closed(int l, int N);

// (quadrature, closed form) for int_0^inf s^{nu-1} e^{-mu s} (ln s)^j ds
std::pair<double, double> eq22_oracle(double nu, double mu, int j);

enum class Gauge { symmetric, asymmetric };

struct LandauLabel {
  Gauge gauge = Gauge::asymmetric;
  int N = 0;  // asymmetric
  int n = 0;  // symmetric
  int l = 0;  // symmetric
};

// Delta / hbar^2 of a uniform-field state by flat-measure quadrature on a
// square grid (trapezoid both ways), canonical p_x = -i hbar d/dx by
// Richardson differences of the analytic state.
double landau_delta(const LandauLabel& label, const PhysParams& p);
MomentSet landau_moments(const LandauLabel& label, const PhysParams& p);

// Values listed for the uniform-field states, in hbar^2.
double landau_delta_reference(const LandauLabel& label);

// (l, Delta/hbar^2) for N in {1, 2}
std::vector<std::pair<int, double>> uncertainty_limit_curve(int N, const std::vector<int>& l_list);
// 9/4 (N=1), 25/4 (N=2)
double uncertainty_limit_target(int N);

}  // namespace morseband::moments
