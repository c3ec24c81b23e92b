#include "morseband/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "morseband/errors.hpp"

namespace morseband {

namespace {
constexpr double kPi = std::numbers::pi;
}

PhysParams PhysParams::natural() { return PhysParams{}; }

PhysParams PhysParams::cgs(double B0_gauss, double a0_cm) {
  PhysParams p;
  p.B0 = B0_gauss;
  p.a0 = a0_cm;
  p.mu = 9.1093837015e-28;     // g
  p.hbar = 1.054571817e-27;    // erg s
  p.c = 2.99792458e10;         // cm / s
  p.e = -4.80320471e-10;       // esu
  return p;
}

double PhysParams::beta() const { return -e * B0 * a0 * a0 / (2.0 * kPi * kPi * hbar * c); }

double PhysParams::wavenumber() const { return 2.0 * kPi / a0; }

double PhysParams::magnetic_length() const { return std::sqrt(hbar * c / (-e * B0)); }

void PhysParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string("PhysParams: ") + name + " must be finite and > 0");
    }
  };
  positive(B0, "B0");
  positive(a0, "a0");
  positive(mu, "mu");
  positive(hbar, "hbar");
  positive(c, "c");
  if (!(e < 0.0) || !std::isfinite(e)) throw DomainError("PhysParams: e must be < 0");
  positive(beta(), "beta");
}

QuantumNumbers::QuantumNumbers(int l_, int n_) : l(l_), n(n_) {
  if (n < 1 || l < 0 || l > n - 1) {
    throw DomainError("QuantumNumbers: need n >= 1 and 0 <= l <= n-1, got (l=" +
                      std::to_string(l) + ", n=" + std::to_string(n) + ")");
  }
}

std::int64_t QuantumNumbers::product() const {
  const std::int64_t nn = n;
  const std::int64_t ll = l;
  return (2 * nn - 2 * ll - 1) * (2 * nn + 2 * ll + 1);
}

namespace model {

double energy_unit(const PhysParams& p) {
  return kPi * kPi * p.hbar * p.hbar / (2.0 * p.mu * p.a0 * p.a0);
}

double energy(const QuantumNumbers& q, const PhysParams& p) {
  // (2 pi^2 hbar^2 / mu a0^2)(n - l - 1/2)(n + l + 1/2) = unit * (2n-2l-1)(2n+2l+1)
  return energy_unit(p) * static_cast<double>(q.product());
}

std::vector<QuantumNumbers> factor_pair_states(std::int64_t product) {
  std::vector<QuantumNumbers> out;
  if (product <= 0 || product % 2 == 0) return out;
  for (std::int64_t a = 1; a * a < product; a += 2) {
    if (product % a != 0) continue;
    const std::int64_t b = product / a;
    if ((a + b) % 4 != 0) continue;
    out.emplace_back(static_cast<int>((b - a - 2) / 4), static_cast<int>((a + b) / 4));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::int64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<DegeneracyReport> degeneracy_scan(int n_max) {
  if (n_max < 1) throw DomainError("degeneracy_scan: n_max must be >= 1");
  // one stripe per n; merged in n order so the grouping is deterministic
  std::vector<std::vector<QuantumNumbers>> stripes(n_max);
#pragma omp parallel for schedule(static)
  for (int n = 1; n <= n_max; ++n) {
    auto& s = stripes[n - 1];
    s.reserve(n);
    for (int l = 0; l < n; ++l) s.emplace_back(l, n);
  }
  std::map<std::int64_t, std::vector<QuantumNumbers>> groups;
  for (const auto& stripe : stripes) {
    for (const auto& q : stripe) groups[q.product()].push_back(q);
  }
  std::vector<DegeneracyReport> out;
  out.reserve(groups.size());
  for (auto& [product, states] : groups) {
    DegeneracyReport r;
    r.product = product;
    std::sort(states.begin(), states.end());
    r.states = std::move(states);
    r.multiplicity = static_cast<int>(r.states.size());
    const auto all = factor_pair_states(product);
    r.total_multiplicity = static_cast<int>(all.size());
    r.complete = std::all_of(all.begin(), all.end(),
                             [n_max](const QuantumNumbers& q) { return q.n <= n_max; });
    out.push_back(std::move(r));
  }
  return out;
}

std::map<int, int> multiplicity_histogram(const std::vector<DegeneracyReport>& scan) {
  std::map<int, int> hist;
  for (const auto& r : scan) ++hist[r.multiplicity];
  return hist;
}

double landau_energy(int N, const PhysParams& p) {
  if (N < 0) throw DomainError("landau_energy: N must be >= 0");
  return p.hbar * std::abs(p.e) * p.B0 / (p.mu * p.c) * (N + 0.5);
}

PhysParams landau_limit_params(int l, const PhysParams& p_base) {
  if (l < 1) throw DomainError("landau_limit_params: l must be >= 1");
  PhysParams p = p_base;
  p.a0 = 2.0 * kPi * std::sqrt(p.hbar * p.c * l / (std::abs(p.e) * p.B0));
  return p;
}

double landau_limit_error(int N, int l, const PhysParams& p_base) {
  const PhysParams p = landau_limit_params(l, p_base);
  const double model_e = energy(QuantumNumbers::from_level(l, N), p);
  const double landau_e = landau_energy(N, p);
  return std::abs(model_e - landau_e) / landau_e;
}

double landau_limit_error_predicted(int N, int l) { return (2.0 * N + 3.0) / (4.0 * l); }

std::vector<QuantumNumbers> enumerate_subspace(SubspaceKind kind, int index, int count) {
  if (index < 0 || count < 1) throw DomainError("enumerate_subspace: need index >= 0, count >= 1");
  std::vector<QuantumNumbers> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    out.push_back(kind == SubspaceKind::oblique ? QuantumNumbers::from_level(k, index)
                                                : QuantumNumbers::from_level(index, k));
  }
  return out;
}

}  // namespace model
}  // namespace morseband
