#pragma once

// Table builders behind the CLI subcommands. Each returns a report::Table so
// tests can inspect the values without spawning the binary.

#include <iosfwd>
#include <string>
#include <vector>

#include "morseband/config.hpp"
#include "morseband/grid.hpp"
#include "morseband/report.hpp"

namespace morseband::commands {

// Plot-ready sampling used by wavefunction, coherent and export unless overridden.
inline constexpr int kPlotNx = 512;
inline constexpr int kPlotNy = 32;

// (l, n, N, product, E, multiplicity) for n <= n_max, l <= min(l_max, n-1)
report::Table spectrum(const RunConfig& cfg, int l_max, int n_max);

// One row per energy class of the n <= n_max scan; histogram in the meta lines.
report::Table degeneracy(const RunConfig& cfg, int n_max, int min_multiplicity = 1);

// x profile of psi_{l,n}: x, xi, u, radial amplitude, density, weight
report::Table wavefunction(const RunConfig& cfg, const QuantumNumbers& q, int nx = kPlotNx);

// Matrix elements of L+- and the H / Casimir residuals for n <= n_max on the verification grid.
report::Table ladder_check(const RunConfig& cfg, int n_max);

// |<x,y|Z>|^2 on a plot grid, series and closed form side by side.
report::Table coherent_density(const RunConfig& cfg, int l, Complex Z, int nx = kPlotNx, int ny = kPlotNy);
// (r, density) of the resolution-of-identity measure
report::Table coherent_measure(const RunConfig& cfg, int l, double r_max, int points);

// (l, N, Delta_closed, Delta_quadrature, Delta_limit_target), Delta in hbar^2
report::Table uncertainty(const RunConfig& cfg, int l_max, const std::vector<int>& levels, bool quadrature = true);
// Uniform-field comparison: computed vs listed Delta
report::Table landau_uncertainty(const RunConfig& cfg);

// (l, a0(l), E_model, E_landau, rel_error, predicted)
report::Table landau_limit(const RunConfig& cfg, int N, const std::vector<int>& l_schedule);

struct ExportSpec {
  std::string kind = "eigen";  // eigen | coherent | landau-asym | landau-sym
  int l = 0;
  int n = 1;
  int N = 0;
  double k_y = 0.0;
  Complex Z = 0.0;
  int nx = kPlotNx;
  int ny = kPlotNy;
};
SampledState export_state(const RunConfig& cfg, const ExportSpec& spec);
// '# key: value' header (kind, labels, parameters, version) followed by states::write_state_csv.
void write_export(std::ostream& os, const RunConfig& cfg, const ExportSpec& spec, const SampledState& s);

}  // namespace morseband::commands
