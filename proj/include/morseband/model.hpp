#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace morseband {

// Physical constants of the band problem. Natural units (hbar = c = mu = 1,
// e = -1) are the default; cgs() gives an electron in gauss/cm.
struct PhysParams {
  double B0 = 1.0;      // field strength, > 0
  double a0 = 6.283185307179586;  // band width, > 0
  double mu = 1.0;      // effective mass
  double hbar = 1.0;
  double c = 1.0;
  double e = -1.0;      // electron charge, < 0

  static PhysParams natural();
  static PhysParams cgs(double B0_gauss = 1e4, double a0_cm = 1e-5);

  // beta = -e B0 a0^2 / (2 pi^2 hbar c)
  double beta() const;
  // 2 pi / a0: x -> t = k x maps the band coordinate onto ln(xi)
  double wavenumber() const;
  // sqrt(hbar c / (-e B0))
  double magnetic_length() const;

  void validate() const;
  bool operator==(const PhysParams&) const = default;
};

struct QuantumNumbers {
  int l = 0;
  int n = 1;

  QuantumNumbers() = default;
  QuantumNumbers(int l_, int n_);

  // level index along an oblique line, N = n - l - 1
  int N() const { return n - l - 1; }
  // odd integer (2n-2l-1)(2n+2l+1) that fixes the energy
  std::int64_t product() const;

  static QuantumNumbers from_level(int l, int N) { return {l, l + N + 1}; }
  bool operator==(const QuantumNumbers&) const = default;
  auto operator<=>(const QuantumNumbers&) const = default;
};

namespace model {

// pi^2 hbar^2 / (2 mu a0^2); energy(q) = unit * q.product()
double energy_unit(const PhysParams& p);
double energy(const QuantumNumbers& q, const PhysParams& p);

struct DegeneracyReport {
  std::int64_t product = 0;
  std::vector<QuantumNumbers> states;
  int multiplicity = 0;
  // every factor-pair state of this product lies inside the scan window
  bool complete = false;
  // multiplicity counted over all (l, n), not only the window
  int total_multiplicity = 0;
};

// All (l, n) with n <= n_max grouped by exact integer product, sorted by product.
std::vector<DegeneracyReport> degeneracy_scan(int n_max);

// States with the given product found by factorization: odd a * b = product,
// b > a, a + b = 0 (mod 4) maps to n = (a+b)/4, l = (b-a-2)/4.
std::vector<QuantumNumbers> factor_pair_states(std::int64_t product);

bool is_prime(std::int64_t v);

// multiplicity -> number of classes
std::map<int, int> multiplicity_histogram(const std::vector<DegeneracyReport>& scan);

double landau_energy(int N, const PhysParams& p);

// Copy of p_base with a0 = 2 pi sqrt(hbar c l / (|e| B0)).
PhysParams landau_limit_params(int l, const PhysParams& p_base);

// |E(l, l+N+1) - E_N| / E_N under landau_limit_params; equals (2N+3)/(4l).
double landau_limit_error(int N, int l, const PhysParams& p_base);
double landau_limit_error_predicted(int N, int l);

enum class SubspaceKind { oblique, vertical };

// oblique: H_N = {(l, l+N+1)}_{l>=0}; vertical: H^l = {(l, l+N+1)}_{N>=0}
std::vector<QuantumNumbers> enumerate_subspace(SubspaceKind kind, int index, int count);

}  // namespace model
}  // namespace morseband
