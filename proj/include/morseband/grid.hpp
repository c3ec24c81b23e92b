#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "morseband/model.hpp"

namespace morseband {

using Complex = std::complex<double>;

// Rectangular (x, y) grid. x includes both endpoints; y is periodic and
// excludes the duplicate endpoint y_max.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 1.0;
  int nx = 8;
  double y_min = 0.0;
  double y_max = 1.0;
  int ny = 8;

  double hx() const { return (x_max - x_min) / (nx - 1); }
  double hy() const { return (y_max - y_min) / ny; }
  double x(int i) const { return x_min + i * hx(); }
  double y(int j) const { return y_min + j * hy(); }
  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }

  void validate() const;
  bool operator==(const GridSpec&) const = default;
};

// Band grid in x covering u = beta e^{-2 pi x / a0} from u_hi (left edge) down
// to u_lo (right edge); y spans [-a0/2, a0/2).
GridSpec band_grid(const PhysParams& p, int nx = 8192, int ny = 64, double u_lo = 1e-14,
                   double u_hi = 250.0);

// Square [-half_width, half_width) grid for the uniform-field comparison states.
GridSpec plane_grid(double half_width, int nx, int ny);

// Number of x cells at each boundary excluded from finite-difference residuals.
inline constexpr int kMarginCells = 4;

// Complex field on a GridSpec with the x-dependent integration weight.
struct SampledState {
  GridSpec grid;
  std::vector<Complex> values;  // row-major: values[i * ny + j] at (x_i, y_j)
  std::vector<double> weight;   // w(x_i), strictly positive
  std::optional<QuantumNumbers> labels;

  SampledState() = default;
  SampledState(const GridSpec& g, std::vector<double> w);

  Complex& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.ny + j]; }
  const Complex& at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * grid.ny + j];
  }

  // Same grid and weight, zero values, no labels.
  SampledState zeros_like() const;
};

void require_compatible(const SampledState& a, const SampledState& b);

}  // namespace morseband
