#pragma once

// Special functions needed by the Morse-band model: gamma family, classical
// orthogonal polynomials and the Bessel functions J (complex argument), I, K.
//
// Accuracy contracts (double precision):
//   ln_gamma   relative 1e-13 on [1e-3, 1e6]
//   digamma    relative 1e-12 on [1e-3, 1e6] away from its root near 1.4616
//   trigamma   relative 1e-12
//   laguerre   relative 1e-11 for degree <= 200, u <= 1e4 (three-term recurrence)
//   bessel_j   estimated relative error <= 1e-9 against the local envelope of
//              |J|, otherwise AccuracyLossError
//   bessel_i   relative 1e-11 for x <= 700
//   bessel_k   relative 1e-10 for x in [1e-6, 700]
//
// All functions are pure and safe to call concurrently.

#include <complex>
#include <span>

namespace morseband::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// Largest |z| accepted by bessel_j.
inline constexpr double kZMax = 1e3;

// Truncation policy shared by the ascending series: stop once the next term is
// below this fraction of the largest partial sum.
inline constexpr double kSeriesRelTol = 1e-15;
inline constexpr int kSeriesMaxTerms = 500;

enum class Scaling {
  none,
  // I: e^{-x} I_nu(x); K: e^{x} K_nu(x)
  exponential,
};

double ln_gamma(double x);
double digamma(double x);
// Hurwitz zeta zeta(2, x) = sum_k (k + x)^{-2}.
double trigamma(double x);

// Generalized Laguerre polynomial L_m^{(alpha)}(u).
double laguerre(int m, double alpha, double u);
// Fills out[k] = L_k^{(alpha)}(u) for k = 0 .. out.size()-1.
void laguerre_sequence(double alpha, double u, std::span<double> out);
// k-th derivative in u, via d/du L_m^{(a)} = -L_{m-1}^{(a+1)}.
double laguerre_derivative(int m, double alpha, double u, int k = 1);

// Physicists' Hermite polynomial H_n(t).
double hermite(int n, double t);

struct BesselJValue {
  std::complex<double> value;
  double error_estimate = 0.0;  // absolute
  double envelope = 0.0;        // local magnitude scale of |J_nu| near z
  int terms = 0;
};

// J_nu(z) for real nu >= 0 and complex z on the principal branch; returns the
// error estimate instead of throwing.
BesselJValue bessel_j_estimate(double nu, std::complex<double> z);
std::complex<double> bessel_j(double nu, std::complex<double> z);

double bessel_i(double nu, double x, Scaling scaling = Scaling::none);
// K_{-nu} = K_nu, so any real order is accepted.
double bessel_k(double nu, double x, Scaling scaling = Scaling::none);

}  // namespace morseband::specfun
