#pragma once

#include <iosfwd>
#include <optional>
#include <span>

#include "morseband/grid.hpp"
#include "morseband/model.hpp"

namespace morseband::states {

struct AssocBesselValue {
  double value = 0.0;
  bool underflow = false;  // |value| below the double range, reported as 0
};

// B_{l,n}^{(0,beta)}(xi), Laguerre form, evaluated through ln|B| so large l
// does not underflow in the xi^{-l-1} factor.
AssocBesselValue assoc_bessel_checked(int l, int n, double beta, double xi);
double assoc_bessel(int l, int n, double beta, double xi);

// Same function through the Rodrigues form
//   beta^{-l-1} (-1)^{n-l-1} / sqrt(G(n+l+1) G(n-l)) xi^n e^{beta/xi} (d/dxi)^{n+l} (xi^{2l} e^{-beta/xi}).
// The derivative is exact: xi^{2l} e^{-beta/xi} is carried as a Laurent
// polynomial times e^{-beta/xi}, and each d/dxi maps xi^k to k xi^{k-1} + beta xi^{k-2}.
// Only sensible for small n (the coefficients alternate).
double assoc_bessel_rodrigues(int l, int n, double beta, double xi);

// w(x) = e^{2 pi x / a0} exp(-beta e^{-2 pi x / a0})
double measure_weight(double x, const PhysParams& p);

// sqrt((-e B0 / (pi hbar c)) (2l+1))
double amplitude(int l, const PhysParams& p);

// psi_{l,n}(x, y), pointwise
Complex eigenfunction(const QuantumNumbers& q, const PhysParams& p, double x, double y);

// The x-dependent part A * B_{l,n}(e^{2 pi x / a0}) (real).
double eigen_radial(const QuantumNumbers& q, const PhysParams& p, double x);

SampledState wavefunction(const QuantumNumbers& q, const PhysParams& p, const GridSpec& grid);

// Weight column for a band grid.
std::vector<double> band_weight(const GridSpec& grid, const PhysParams& p);

// Max over the samples of |lhs of the xi-equation| / (largest single term),
// with psi = B_{l,n} and analytic Laguerre derivatives. `energy` defaults to
// model::energy(q, p); pass another value for the wrong-energy control.
double ode_residual(const QuantumNumbers& q, const PhysParams& p, std::span<const double> xi,
                    std::optional<double> energy = std::nullopt);

// Uniform-field comparison states.
struct LandauParams {
  int N = 0;  // asymmetric gauge level
  int n = 0;  // symmetric gauge radial index
  int l = 0;  // symmetric gauge angular index
  double k_y = 0.0;

  static double r_c(const PhysParams& p) { return p.magnetic_length(); }
  double x0(const PhysParams& p) const { return r_c(p) * r_c(p) * k_y; }
};

// e^{-i k_y y} / (2 pi sqrt(sqrt(pi) r_c 2^N N!)) e^{-(x-x0)^2 / 2r_c^2} H_N((x-x0)/r_c)
Complex landau_asym(const LandauParams& lp, const PhysParams& p, double x, double y);
// sqrt(n! / (pi (n+l)!)) ((x+iy)/(sqrt2 r_c))^l e^{-rho^2/4r_c^2} / (sqrt2 r_c) L_n^{(l)}(rho^2/2r_c^2)
Complex landau_sym(const LandauParams& lp, const PhysParams& p, double x, double y);

// Flat weight.
SampledState landau_state_asym(const LandauParams& lp, const PhysParams& p, const GridSpec& grid);
SampledState landau_state_sym(const LandauParams& lp, const PhysParams& p, const GridSpec& grid);

// x, y, Re psi, Im psi, |psi|^2, w; one row per grid point.
void write_state_csv(std::ostream& os, const SampledState& s);

}  // namespace morseband::states
