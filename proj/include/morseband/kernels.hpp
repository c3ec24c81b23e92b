#pragma once

// Grid kernels. Every kernel has an OpenMP implementation in kernels::parallel
// and a plain loop in kernels::serial kept as the reference for tests and the
// benchmark. Reductions accumulate one partial per x row and then add the rows
// in index order, so both variants return bit-identical results for any
// thread count.

#include <span>

#include "morseband/grid.hpp"

namespace morseband::kernels {

enum class Axis { x, y };

namespace serial {

// d/dx or d^2/dx^2 with 5-point O(h^4) stencils, one-sided at the two cells
// nearest each x boundary.
void derivative_x(const GridSpec& g, std::span<const Complex> in, std::span<Complex> out,
                  int order);
// Spectral (trigonometric interpolation) derivative along the periodic y axis.
void derivative_y(const GridSpec& g, std::span<const Complex> in, std::span<Complex> out,
                  int order);
// sum_ij conj(a) b w_i, trapezoid in x and periodic trapezoid in y
Complex inner_product(const GridSpec& g, std::span<const double> w, std::span<const Complex> a,
                      std::span<const Complex> b);
// sqrt(sum |a|^2 w) over rows [margin, nx - margin)
double weighted_norm(const GridSpec& g, std::span<const double> w, std::span<const Complex> a,
                     int margin);

}  // namespace serial

namespace parallel {

void derivative_x(const GridSpec& g, std::span<const Complex> in, std::span<Complex> out,
                  int order);
void derivative_y(const GridSpec& g, std::span<const Complex> in, std::span<Complex> out,
                  int order);
Complex inner_product(const GridSpec& g, std::span<const double> w, std::span<const Complex> a,
                      std::span<const Complex> b);
double weighted_norm(const GridSpec& g, std::span<const double> w, std::span<const Complex> a,
                     int margin);

// Calls fill(i, row) for every x row; row has ny entries.
template <class RowFill>
void fill_rows(const GridSpec& g, std::span<Complex> out, RowFill&& fill) {
  const int ny = g.ny;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < g.nx; ++i) {
    fill(i, out.subspan(static_cast<std::size_t>(i) * ny, ny));
  }
}

}  // namespace parallel

// Circulant kernel of the spectral y derivative: out_j = sum_s d[s] in_{j-s}.
std::vector<double> spectral_kernel(int ny, double period, int order);

// Sets the worker count for the parallel kernels; <= 0 keeps the runtime default.
void set_thread_limit(int threads);
int thread_limit();

}  // namespace morseband::kernels
