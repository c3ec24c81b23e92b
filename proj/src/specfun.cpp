#include "morseband/specfun.hpp"

#include <cmath>
#include <string>

#include "morseband/errors.hpp"

namespace morseband::specfun {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(name) + ": argument must be finite and > 0, got " +
                      std::to_string(x));
  }
}

// Recurrence shifts x up to this point before the asymptotic series is used.
constexpr double kAsymptoticStart = 12.0;

}  // namespace

double ln_gamma(double x) {
  require_positive(x, "ln_gamma");
  int sign = 0;
  return ::lgamma_r(x, &sign);  // reentrant; std::lgamma writes signgam
}

double digamma(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  while (x < kAsymptoticStart) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  // B_{2k} / (2k x^{2k}), k = 1..7
  const double tail =
      r * (1.0 / 12 -
           r * (1.0 / 120 -
                r * (1.0 / 252 -
                     r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12.0))))));
  return shift + std::log(x) - 0.5 / x - tail;
}

double trigamma(double x) {
  require_positive(x, "trigamma");
  double shift = 0.0;
  while (x < kAsymptoticStart) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  // B_{2k} / x^{2k+1}, k = 1..8
  const double tail =
      r * (1.0 / 6 -
           r * (1.0 / 30 -
                r * (1.0 / 42 -
                     r * (1.0 / 30 -
                          r * (5.0 / 66 -
                               r * (691.0 / 2730 - r * (7.0 / 6 - r * 3617.0 / 510)))))));
  return shift + 1.0 / x + 0.5 * r + tail / x;
}

double laguerre(int m, double alpha, double u) {
  if (m < 0) throw DomainError("laguerre: degree must be >= 0");
  if (!(alpha > -1.0)) throw DomainError("laguerre: alpha must be > -1");
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - u;
  for (int k = 1; k < m; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - u) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

void laguerre_sequence(double alpha, double u, std::span<double> out) {
  if (!(alpha > -1.0)) throw DomainError("laguerre_sequence: alpha must be > -1");
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = 1.0 + alpha - u;
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double kk = static_cast<double>(k);
    out[k + 1] = ((2.0 * kk + 1.0 + alpha - u) * out[k] - (kk + alpha) * out[k - 1]) / (kk + 1.0);
  }
}

double laguerre_derivative(int m, double alpha, double u, int k) {
  if (k < 0) throw DomainError("laguerre_derivative: order must be >= 0");
  if (k > m) return 0.0;
  const double v = laguerre(m - k, alpha + k, u);
  return (k % 2 == 0) ? v : -v;
}

double hermite(int n, double t) {
  if (n < 0) throw DomainError("hermite: degree must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * t;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * t * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace morseband::specfun
