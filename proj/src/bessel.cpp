#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "morseband/errors.hpp"
#include "morseband/specfun.hpp"

namespace morseband::specfun {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// ---------------------------------------------------------------------------
// J_nu(z), complex z
// ---------------------------------------------------------------------------

// Magnitude scale of J_nu near z, used to judge cancellation: the small-argument
// leading term inside the first turning point, the Hankel envelope outside.
double j_envelope(double nu, cplx z) {
  const double r = std::abs(z);
  if (r == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double lead = std::exp(nu * std::log(0.5 * r) - ln_gamma(nu + 1.0));
  if (r <= nu + 1.0) return lead * std::exp(std::abs(z.imag()));
  return std::sqrt(2.0 / (kPi * r)) * std::cosh(z.imag());
}

BesselJValue j_series(double nu, cplx z) {
  BesselJValue out;
  if (z == cplx(0.0)) {
    out.value = nu == 0.0 ? 1.0 : 0.0;
    out.terms = 1;
    return out;
  }
  const cplx half = 0.5 * z;
  cplx term = std::exp(nu * std::log(half) - ln_gamma(nu + 1.0));
  const cplx q = -half * half;
  cplx sum = term;
  double abs_sum = std::abs(term);
  double largest = std::abs(sum);
  int k = 0;
  for (; k < kSeriesMaxTerms; ++k) {
    term *= q / ((k + 1.0) * (k + 1.0 + nu));
    sum += term;
    abs_sum += std::abs(term);
    largest = std::max(largest, std::abs(sum));
    // past the peak term and below the truncation threshold
    if (k + 1 > 0.5 * std::abs(z) && std::abs(term) <= kSeriesRelTol * largest) break;
  }
  out.value = sum;
  out.terms = k + 2;
  // rounding in the summed magnitudes plus the first omitted term
  out.error_estimate = 4.0 * kEps * abs_sum + std::abs(term) * std::abs(q) / ((k + 2.0) * (k + 2.0 + nu));
  if (k == kSeriesMaxTerms) out.error_estimate = std::numeric_limits<double>::infinity();
  return out;
}

// Hankel asymptotic expansion, |arg z| <= pi/2.
BesselJValue j_hankel(double nu, cplx z) {
  BesselJValue out;
  const double mu = 4.0 * nu * nu;
  const cplx inv8z = 1.0 / (8.0 * z);
  cplx p = 1.0;
  cplx q = 0.0;
  cplx b = 1.0;
  double last = std::numeric_limits<double>::infinity();
  int k = 1;
  for (; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const cplx next = b * (mu - odd * odd) * inv8z / static_cast<double>(k);
    const double mag = std::abs(next);
    if (mag >= last) break;  // asymptotic series started to diverge
    b = next;
    last = mag;
    // b_k enters P (k even) or Q (k odd) with sign (-1)^{floor(k/2)}
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) p += sign * b; else q += sign * b;
    if (mag < 1e-17) break;
  }
  const cplx chi = z - (0.5 * nu + 0.25) * kPi;
  const cplx amp = std::sqrt(2.0 / (kPi * z));
  out.value = amp * (p * std::cos(chi) - q * std::sin(chi));
  out.terms = k;
  const double scale = std::abs(amp) * std::cosh(z.imag());
  out.error_estimate = (last + 8.0 * kEps) * scale;
  return out;
}

BesselJValue j_right_half(double nu, cplx z) {
  const double r = std::abs(z);
  BesselJValue best;
  best.error_estimate = std::numeric_limits<double>::infinity();
  if (r < 20.0) best = j_series(nu, z);
  if (r > 8.0) {
    const BesselJValue h = j_hankel(nu, z);
    if (h.error_estimate < best.error_estimate) best = h;
  }
  return best;
}

// ---------------------------------------------------------------------------
// I_nu(x)
// ---------------------------------------------------------------------------

// Ascending series, all terms positive; returns e^{-shift} I_nu(x).
double i_series(double nu, double x, double shift) {
  const double log_lead = nu * std::log(0.5 * x) - ln_gamma(nu + 1.0) - shift;
  double term = std::exp(log_lead);
  if (term == 0.0) return 0.0;
  const double q = 0.25 * x * x;
  double sum = term;
  for (int k = 0; k < 4 * kSeriesMaxTerms; ++k) {
    term *= q / ((k + 1.0) * (k + 1.0 + nu));
    sum += term;
    if (k + 1 > 0.5 * x && term <= 0.1 * kEps * sum) return sum;
  }
  throw ConvergenceError("bessel_i: series did not converge");
}

// Large-x expansion of e^{-x} I_nu(x); ok == false when it cannot reach full precision.
double i_asymptotic(double nu, double x, bool& ok) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  double last = 1.0;
  ok = false;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * x);
    const double mag = std::abs(term);
    if (mag > last) break;
    sum += term;
    last = mag;
    if (mag < 0.1 * kEps * std::abs(sum)) {
      ok = true;
      break;
    }
  }
  return sum / std::sqrt(2.0 * kPi * x);
}

// ---------------------------------------------------------------------------
// K_nu(x): Temme series (x < 2) or Steed's continued fraction (x >= 2) for the
// reduced order |mu| <= 1/2, then upward recurrence, which is stable for K.
// ---------------------------------------------------------------------------

// Taylor coefficients of 1/Gamma(z) = sum_k c_k z^k, k = 1..28.
constexpr std::array<double, 28> kInvGammaTaylor = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
};

struct TemmeGammas {
  double gam1;   // (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
  double gam2;   // (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
  double gampl;  // 1/Gamma(1+mu)
  double gammi;  // 1/Gamma(1-mu)
};

TemmeGammas temme_gammas(double mu) {
  // 1/Gamma(1+mu) = sum_k c_{k+1} mu^k, split by parity of k
  double even = 0.0;
  double odd = 0.0;
  const double mu2 = mu * mu;
  for (int k = static_cast<int>(kInvGammaTaylor.size()) - 1; k >= 0; --k) {
    if (k % 2 == 0) even = even * mu2 + kInvGammaTaylor[k];
    else odd = odd * mu2 + kInvGammaTaylor[k];
  }
  // even = sum_j c_{2j+1} mu^{2j}; odd = sum_j c_{2j+2} mu^{2j}
  TemmeGammas g;
  g.gam2 = even;
  g.gam1 = -odd;
  g.gampl = even + mu * odd;
  g.gammi = even - mu * odd;
  return g;
}

// Returns {K_mu, K_{mu+1}}, scaled by e^{x} when requested.
std::pair<double, double> k_reduced(double mu, double x, bool scaled) {
  if (x < 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    const double mu2 = mu * mu;
    int i = 1;
    for (; i <= 1000; ++i) {
      ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu2);
      c *= d / i;
      p /= (i - mu);
      q /= (i + mu);
      const double del = c * ff;
      sum += del;
      const double del1 = c * (p - i * ff);
      sum1 += del1;
      if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (i > 1000) throw ConvergenceError("bessel_k: Temme series did not converge");
    double k0 = sum;
    double k1 = sum1 * 2.0 / x;
    if (scaled) {
      const double ex = std::exp(x);
      k0 *= ex;
      k1 *= ex;
    }
    return {k0, k1};
  }
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 2;
  for (; i <= 10000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  if (i > 10000) throw ConvergenceError("bessel_k: continued fraction did not converge");
  h = a1 * h;
  double k0 = std::sqrt(kPi / (2.0 * x)) / s;
  if (!scaled) k0 *= std::exp(-x);
  const double k1 = k0 * (mu + x + 0.5 - h) / x;
  return {k0, k1};
}

}  // namespace

BesselJValue bessel_j_estimate(double nu, std::complex<double> z) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("bessel_j: order must be >= 0");
  if (!(std::abs(z) <= kZMax)) {
    throw DomainError("bessel_j: |z| exceeds Z_MAX = " + std::to_string(kZMax));
  }
  BesselJValue out;
  if (z.real() >= 0.0) {
    out = j_right_half(nu, z);
  } else {
    // J_nu(w e^{+-i pi}) = e^{+-i pi nu} J_nu(w) with Re w > 0
    out = j_right_half(nu, -z);
    const double sign = z.imag() >= 0.0 ? 1.0 : -1.0;
    out.value *= std::polar(1.0, sign * kPi * nu);
  }
  out.envelope = j_envelope(nu, z);
  return out;
}

std::complex<double> bessel_j(double nu, std::complex<double> z) {
  const BesselJValue v = bessel_j_estimate(nu, z);
  const double scale = std::max(std::abs(v.value), v.envelope);
  if (scale > 0.0 && v.error_estimate > 1e-9 * scale) {
    throw AccuracyLossError("bessel_j: estimated relative error " +
                            std::to_string(v.error_estimate / scale) + " at |z| = " +
                            std::to_string(std::abs(z)));
  }
  return v.value;
}

double bessel_i(double nu, double x, Scaling scaling) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("bessel_i: order must be >= 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("bessel_i: x must be >= 0");
  const bool scaled = scaling == Scaling::exponential;
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  double value = 0.0;
  bool ok = false;
  if (x >= 20.0) value = i_asymptotic(nu, x, ok);
  if (!ok) value = i_series(nu, x, x);
  if (scaled) return value;
  if (x > 700.0 || std::log(value) + x > std::log(std::numeric_limits<double>::max())) {
    throw RangeError("bessel_i: I_" + std::to_string(nu) + "(" + std::to_string(x) +
                     ") overflows; request the scaled value");
  }
  return value * std::exp(x);
}

double bessel_k(double nu, double x, Scaling scaling) {
  if (!std::isfinite(nu)) throw DomainError("bessel_k: order must be finite");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_k: x must be > 0");
  nu = std::abs(nu);
  const bool scaled = scaling == Scaling::exponential;
  const int steps = static_cast<int>(nu + 0.5);
  const double mu = nu - steps;
  auto [k_mu, k_next] = k_reduced(mu, x, scaled);
  for (int i = 1; i <= steps; ++i) {
    const double k_up = (mu + i) * (2.0 / x) * k_next + k_mu;
    k_mu = k_next;
    k_next = k_up;
    if (!std::isfinite(k_mu)) break;
  }
  if (!std::isfinite(k_mu) || k_mu > std::numeric_limits<double>::max()) {
    throw RangeError("bessel_k: K_" + std::to_string(nu) + "(" + std::to_string(x) + ") overflows");
  }
  return k_mu;
}

}  // namespace morseband::specfun
