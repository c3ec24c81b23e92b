#pragma once

// Barut-Girardello coherent states |Z>_l of the l-th su(1,1) representation:
// eigenstates of L- built on the vertical line {(l, l+N+1)}_N.

#include <vector>

#include "morseband/grid.hpp"
#include "morseband/model.hpp"

namespace morseband::coherent {

struct CoherentSpec {
  int l = 0;
  Complex Z = 0.0;
  int truncation = 30;  // highest N kept

  // Truncation starts at max(30, ceil(6|Z|) + 2l) and grows until the first
  // omitted coefficient is <= 1e-14 of the largest retained one.
  static CoherentSpec make(int l, Complex Z);
  void validate() const;
};

// c_N = |Z|^{l+1/2} / sqrt(I_{2l+1}(2|Z|)) Z^N / sqrt(N! (2l+N+1)!), N = 0..truncation,
// evaluated in log form with the exponentially scaled I.
std::vector<Complex> bg_coefficients(const CoherentSpec& spec);

// sum_N c_N psi_{l,l+N+1} on the grid (band weight).
SampledState bg_state_series(const CoherentSpec& spec, const PhysParams& p, const GridSpec& grid);

enum class BranchPolicy {
  // sqrt(beta Z e^{-t - i theta}) = sqrt(beta) sqrt(Z) e^{-(t + i theta)/2},
  // with sqrt(Z) principal: the branch on which the closed form equals the series
  factored,
  // principal square root of the full product
  principal,
};

struct ClosedFormDiagnostics {
  // grid points where the two branch choices give opposite square roots
  long branch_flips = 0;
};

// sqrt(2 pi (2l+1))/a0 e^{-pi(x+iy)/a0 + Z e^{-2 pi i y/a0}} (|Z|/Z)^{l+1/2}
//   J_{2l+1}(2 sqrt(beta Z e^{-2 pi (x+iy)/a0})) / sqrt(I_{2l+1}(2|Z|))
// Z = 0 is the limit |l, l+1>.
SampledState bg_state_closed(const CoherentSpec& spec, const PhysParams& p, const GridSpec& grid,
                             BranchPolicy policy = BranchPolicy::factored,
                             ClosedFormDiagnostics* diag = nullptr);

// max_{ij} |a - b| sqrt(w_i) / max_{ij} |b| sqrt(w_i) over interior rows
double weighted_sup_distance(const SampledState& a, const SampledState& b, int margin = kMarginCells);

// (2/pi) r I_{2l+1}(2r) K_{2l+1}(2r), from the exponentially scaled pair.
double bg_measure_density(int l, double r);

inline double default_r_max(int l) { return 40.0 + 10.0 * (2 * l + 1); }

// int_0^inf r^{2l+2N+2} K_{2l+1}(2r) dr by integrate_radial
double radial_moment(int l, int N);
// 1/4 N! (2l+N+1)!
double radial_moment_closed(int l, int N);

struct IdentityCheck {
  // M_{NN'} - delta_{NN'}, N, N' = 0..n_max
  std::vector<std::vector<double>> deviation;
  std::vector<double> radial;           // radial_moment(l, N)
  std::vector<double> radial_expected;  // radial_moment_closed(l, N)
  double max_deviation = 0.0;
  double max_radial_rel_error = 0.0;
};

// M_{NN'} = int dmu_l(Z) <l,l+N+1|Z><Z|l,l+N'+1> with the angle done by a
// 64-point periodic trapezoid and the radius by integrate_radial.
IdentityCheck identity_resolution_check(int l, int n_max);

}  // namespace morseband::coherent
