#include "morseband/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "morseband/errors.hpp"
#include "morseband/specfun.hpp"

namespace morseband::quadrature {

namespace {

constexpr double kLogUnderflow = -700.0;

// L_n^{(alpha)}(x) and L_{n-1}^{(alpha)}(x), both divided by e^{log_scale}.
struct ScaledLaguerre {
  double ln = 0.0;
  double lnm1 = 0.0;
  double log_scale = 0.0;
};

ScaledLaguerre scaled_laguerre(int n, double alpha, double x) {
  ScaledLaguerre s;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  if (n == 1) {
    s.ln = cur;
    s.lnm1 = prev;
    return s;
  }
  constexpr double kBig = 1e150;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      prev /= kBig;
      s.log_scale += std::log(kBig);
    }
  }
  s.ln = cur;
  s.lnm1 = prev;
  return s;
}

std::unique_ptr<GaussRule> build_laguerre(int n, double alpha) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) sub(i - 1) = std::sqrt(i * (i + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& guesses = solver.eigenvalues();

  auto rule = std::make_unique<GaussRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  rule->log_weights.resize(n);
  const double log_norm = std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0);
  for (int i = 0; i < n; ++i) {
    double x = guesses(i);
    ScaledLaguerre s;
    double deriv = 0.0;
    for (int it = 0; it < 50; ++it) {
      s = scaled_laguerre(n, alpha, x);
      deriv = (n * s.ln - (n + alpha) * s.lnm1) / x;
      const double step = s.ln / deriv;
      x -= step;
      if (std::abs(step) <= 4e-16 * x) break;
    }
    s = scaled_laguerre(n, alpha, x);
    deriv = (n * s.ln - (n + alpha) * s.lnm1) / x;
    rule->nodes[i] = x;
    const double lw = log_norm - std::log(x) - 2.0 * (std::log(std::abs(deriv)) + s.log_scale);
    rule->log_weights[i] = lw;
    rule->weights[i] = std::exp(lw);
  }
  return rule;
}

std::unique_ptr<GaussRule> build_legendre(int n) {
  auto rule = std::make_unique<GaussRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  rule->log_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // ascending order
    rule->nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule->weights[n - 1 - i] = w;
    rule->log_weights[n - 1 - i] = std::log(w);
  }
  return rule;
}

template <class Key, class Build>
const GaussRule& cached(std::map<Key, std::unique_ptr<GaussRule>>& cache, std::mutex& m,
                        const Key& key, Build&& build) {
  std::lock_guard lock(m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build()).first;
  return *it->second;
}

template <class T>
IntegrationResultT<T> semi_infinite(const std::function<T(double)>& f, double a,
                                    const SemiInfiniteOptions& opts) {
  if (!(a > -1.0) || !std::isfinite(a)) {
    throw DomainError("integrate_semi_infinite_u: weight exponent must be > -1");
  }
  IntegrationResultT<T> out;
  T values[3] = {};
  for (int k = 0; k < 3; ++k) {
    const GaussRule& rule = gauss_laguerre(kLaguerreOrders[k], 0.0);
    T lower{};
    T upper{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double s = rule.nodes[i];
      // (0, 1]: u = e^{-s}, u^a e^{-u} du -> e^{-s} [e^{-a s} e^{-u}] ds
      const double lw_low = rule.log_weights[i] - a * s;
      const double u = std::exp(-s);
      // u == 0 would hand f a log singularity; the dropped mass is below e^{-745 (1+a)}
      if (lw_low > kLogUnderflow && u > 0.0) {
        lower += std::exp(lw_low - u) * f(u);
        ++out.evaluations;
      }
      // [1, inf): u = 1 + v, u^a e^{-u} du -> e^{-v} [(1+v)^a e^{-1}] dv
      const double lw_up = rule.log_weights[i] + a * std::log1p(s) - 1.0;
      if (lw_up > kLogUnderflow) {
        upper += std::exp(lw_up) * f(1.0 + s);
        ++out.evaluations;
      }
    }
    values[k] = lower + upper;
  }
  out.value = values[2];
  out.error_estimate = std::abs(values[2] - values[1]);
  const double scale = std::max(std::abs(values[2]), opts.abs_floor);
  if (!(out.error_estimate <= opts.rel_tol * scale)) {
    throw ConvergenceError("integrate_semi_infinite_u: orders 128/256 differ by " +
                           std::to_string(out.error_estimate) + " (scale " +
                           std::to_string(scale) + ")");
  }
  return out;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   const GaussRule& rule, int& evals) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  evals += static_cast<int>(rule.nodes.size());
  return half * acc;
}

double adaptive_panel(const std::function<double(double)>& f, double a, double b, double tol,
                      int depth, const RadialOptions& opts, double& err, int& evals) {
  const double coarse = gauss_panel(f, a, b, gauss_legendre(20), evals);
  const double fine = gauss_panel(f, a, b, gauss_legendre(40), evals);
  const double diff = std::abs(fine - coarse);
  if (diff <= tol || depth >= opts.max_depth) {
    err += diff;
    return fine;
  }
  const double mid = 0.5 * (a + b);
  return adaptive_panel(f, a, mid, 0.5 * tol, depth + 1, opts, err, evals) +
         adaptive_panel(f, mid, b, 0.5 * tol, depth + 1, opts, err, evals);
}

}  // namespace

const GaussRule& gauss_laguerre(int order, double alpha) {
  if (order < 1) throw DomainError("gauss_laguerre: order must be >= 1");
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre: alpha must be > -1");
  static std::map<std::pair<int, double>, std::unique_ptr<GaussRule>> cache;
  static std::mutex m;
  return cached(cache, m, std::pair{order, alpha}, [&] { return build_laguerre(order, alpha); });
}

const GaussRule& gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  static std::mutex m;
  return cached(cache, m, order, [&] { return build_legendre(order); });
}

IntegrationResult integrate_semi_infinite_u(const std::function<double(double)>& f,
                                            double weight_exponent, SemiInfiniteOptions opts) {
  return semi_infinite<double>(f, weight_exponent, opts);
}

ComplexIntegrationResult integrate_semi_infinite_u_complex(const std::function<Complex(double)>& f,
                                                           double weight_exponent,
                                                           SemiInfiniteOptions opts) {
  return semi_infinite<Complex>(f, weight_exponent, opts);
}

IntegrationResult integrate_radial(const std::function<double(double)>& f, double r_max,
                                   RadialOptions opts) {
  if (!(r_max > 0.0)) throw DomainError("integrate_radial: r_max must be > 0");
  const int panels = std::max(1, static_cast<int>(std::ceil(r_max / opts.panel_width)));
  const double width = r_max / panels;
  IntegrationResult out;

  // first pass fixes the absolute tolerance per panel
  double crude = 0.0;
  for (int p = 0; p < panels; ++p) {
    crude += gauss_panel(f, p * width, (p + 1) * width, gauss_legendre(40), out.evaluations);
  }
  const double tol = opts.rel_tol * std::max(std::abs(crude), 1e-300) / panels;
  double err = 0.0;
  double value = 0.0;
  for (int p = 0; p < panels; ++p) {
    value += adaptive_panel(f, p * width, (p + 1) * width, tol, 0, opts, err, out.evaluations);
  }

  const double f_end = f(r_max);
  const double f_before = f(r_max - 1.0);
  out.evaluations += 2;
  double tail = 0.0;
  if (f_end != 0.0) {
    if (!(f_end * f_before > 0.0) || !(std::abs(f_end) < std::abs(f_before))) {
      throw ConvergenceError("integrate_radial: integrand is not decaying at r_max");
    }
    const double kappa = std::log(f_before / f_end);
    tail = f_end / kappa;
  }
  if (std::abs(tail) > opts.tail_tol * std::abs(value)) {
    throw ConvergenceError("integrate_radial: tail estimate " + std::to_string(tail) +
                           " dominates; increase r_max");
  }
  out.value = value;
  out.error_estimate = err + std::abs(tail);
  return out;
}

Complex grid_inner_product(const SampledState& a, const SampledState& b) {
  require_compatible(a, b);
  return kernels::parallel::inner_product(a.grid, a.weight, a.values, b.values);
}

double weighted_norm(const SampledState& a, int margin) {
  return kernels::parallel::weighted_norm(a.grid, a.weight, a.values, margin);
}

SampledState fd_derivative(const SampledState& a, kernels::Axis axis, int order) {
  SampledState out = a.zeros_like();
  if (axis == kernels::Axis::x) {
    kernels::parallel::derivative_x(a.grid, a.values, out.values, order);
  } else {
    kernels::parallel::derivative_y(a.grid, a.values, out.values, order);
  }
  return out;
}

Complex richardson_derivative(const std::function<Complex(double)>& f, double x, int order,
                              double h, int levels) {
  if (order != 1 && order != 2) throw DomainError("richardson_derivative: order must be 1 or 2");
  if (levels < 1 || !(h > 0.0)) throw DomainError("richardson_derivative: need h > 0, levels >= 1");
  const Complex f0 = order == 2 ? f(x) : Complex{};
  std::vector<std::vector<Complex>> table(levels);
  for (int k = 0; k < levels; ++k) {
    const double hk = h / std::pow(2.0, k);
    const Complex fp = f(x + hk);
    const Complex fm = f(x - hk);
    table[k].resize(k + 1);
    table[k][0] = order == 1 ? (fp - fm) / (2.0 * hk) : (fp - 2.0 * f0 + fm) / (hk * hk);
    for (int m = 1; m <= k; ++m) {
      const double factor = std::pow(4.0, m) - 1.0;
      table[k][m] = table[k][m - 1] + (table[k][m - 1] - table[k - 1][m - 1]) / factor;
    }
  }
  return table[levels - 1][levels - 1];
}

}  // namespace morseband::quadrature
