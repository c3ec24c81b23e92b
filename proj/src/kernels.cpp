#include "morseband/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>

#include "morseband/errors.hpp"

namespace morseband::kernels {

namespace {

void check_sizes(const GridSpec& g, std::size_t in, std::size_t out) {
  if (in != g.size() || out != g.size()) throw GridMismatchError("kernel: buffer size != nx*ny");
  if (g.nx < 5) throw GridMismatchError("kernel: need nx >= 5 for the x stencils");
}

// One x column of derivative values at row i. ny-strided access into the row-major buffer.
inline Complex dx_at(const Complex* f, int i, int j, int nx, int ny, double h, int order) {
  auto v = [&](int k) { return f[static_cast<std::size_t>(k) * ny + j]; };
  if (order == 1) {
    const double s = 1.0 / (12.0 * h);
    if (i >= 2 && i <= nx - 3) return s * (v(i - 2) - 8.0 * v(i - 1) + 8.0 * v(i + 1) - v(i + 2));
    if (i == 0) return s * (-25.0 * v(0) + 48.0 * v(1) - 36.0 * v(2) + 16.0 * v(3) - 3.0 * v(4));
    if (i == 1) return s * (-3.0 * v(0) - 10.0 * v(1) + 18.0 * v(2) - 6.0 * v(3) + v(4));
    const int e = nx - 1;
    if (i == e) return -s * (-25.0 * v(e) + 48.0 * v(e - 1) - 36.0 * v(e - 2) + 16.0 * v(e - 3) - 3.0 * v(e - 4));
    return -s * (-3.0 * v(e) - 10.0 * v(e - 1) + 18.0 * v(e - 2) - 6.0 * v(e - 3) + v(e - 4));
  }
  const double s = 1.0 / (12.0 * h * h);
  if (i >= 2 && i <= nx - 3) {
    return s * (-v(i - 2) + 16.0 * v(i - 1) - 30.0 * v(i) + 16.0 * v(i + 1) - v(i + 2));
  }
  if (i == 0) return s * (35.0 * v(0) - 104.0 * v(1) + 114.0 * v(2) - 56.0 * v(3) + 11.0 * v(4));
  if (i == 1) return s * (11.0 * v(0) - 20.0 * v(1) + 6.0 * v(2) + 4.0 * v(3) - v(4));
  const int e = nx - 1;
  if (i == e) return s * (35.0 * v(e) - 104.0 * v(e - 1) + 114.0 * v(e - 2) - 56.0 * v(e - 3) + 11.0 * v(e - 4));
  return s * (11.0 * v(e) - 20.0 * v(e - 1) + 6.0 * v(e - 2) + 4.0 * v(e - 3) - v(e - 4));
}

inline void dy_row(const Complex* in, Complex* out, int ny, const std::vector<double>& kernel) {
  for (int j = 0; j < ny; ++j) {
    Complex acc = 0.0;
    for (int s = 0; s < ny; ++s) {
      int src = j - s;
      if (src < 0) src += ny;
      acc += kernel[s] * in[src];
    }
    out[j] = acc;
  }
}

inline Complex row_inner(const Complex* a, const Complex* b, int ny) {
  Complex acc = 0.0;
  for (int j = 0; j < ny; ++j) acc += std::conj(a[j]) * b[j];
  return acc;
}

inline double row_norm2(const Complex* a, int ny) {
  double acc = 0.0;
  for (int j = 0; j < ny; ++j) acc += std::norm(a[j]);
  return acc;
}

inline double trapezoid_x(const GridSpec& g, int i) {
  return (i == 0 || i == g.nx - 1) ? 0.5 * g.hx() : g.hx();
}

void check_order(int order) {
  if (order != 1 && order != 2) throw DomainError("derivative order must be 1 or 2");
}

}  // namespace

std::vector<double> spectral_kernel(int ny, double period, int order) {
  check_order(order);
  std::vector<double> d(ny, 0.0);
  const double base = 2.0 * std::numbers::pi / period;
  for (int s = 0; s < ny; ++s) {
    double acc = 0.0;
    for (int m = 1; m <= ny / 2; ++m) {
      const double k = base * m;
      const double theta = 2.0 * std::numbers::pi * m * s / ny;
      const bool nyquist = (ny % 2 == 0) && (m == ny / 2);
      if (order == 1) {
        // i k (e^{i m theta} - e^{-i m theta}) = -2 k sin; the Nyquist mode has no odd part
        if (!nyquist) acc += -2.0 * k * std::sin(theta);
      } else {
        acc += (nyquist ? -1.0 : -2.0) * k * k * std::cos(theta);
      }
    }
    d[s] = acc / ny;
  }
  return d;
}

void set_thread_limit(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int thread_limit() { return omp_get_max_threads(); }

namespace serial {

void derivative_x(const GridSpec& g, std::span<const Complex> in, std::span<Complex> out,
                  int order) {
  check_sizes(g, in.size(), out.size());
  check_order(order);
  const double h = g.hx();
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      out[static_cast<std::size_t>(i) * g.ny + j] = dx_at(in.data(), i, j, g.nx, g.ny, h, order);
    }
  }
}

void derivative_y(const GridSpec& g, std::span<const Complex> in, std::span<Complex> out,
                  int order) {
  check_sizes(g, in.size(), out.size());
  const auto kernel = spectral_kernel(g.ny, g.y_max - g.y_min, order);
  for (int i = 0; i < g.nx; ++i) {
    const std::size_t off = static_cast<std::size_t>(i) * g.ny;
    dy_row(in.data() + off, out.data() + off, g.ny, kernel);
  }
}

Complex inner_product(const GridSpec& g, std::span<const double> w, std::span<const Complex> a,
                      std::span<const Complex> b) {
  check_sizes(g, a.size(), b.size());
  Complex total = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    const std::size_t off = static_cast<std::size_t>(i) * g.ny;
    total += (w[i] * trapezoid_x(g, i)) * row_inner(a.data() + off, b.data() + off, g.ny);
  }
  return total * g.hy();
}

double weighted_norm(const GridSpec& g, std::span<const double> w, std::span<const Complex> a,
                     int margin) {
  check_sizes(g, a.size(), a.size());
  double total = 0.0;
  for (int i = margin; i < g.nx - margin; ++i) {
    total += w[i] * g.hx() * row_norm2(a.data() + static_cast<std::size_t>(i) * g.ny, g.ny);
  }
  return std::sqrt(total * g.hy());
}

}  // namespace serial

namespace parallel {

void derivative_x(const GridSpec& g, std::span<const Complex> in, std::span<Complex> out,
                  int order) {
  check_sizes(g, in.size(), out.size());
  check_order(order);
  const double h = g.hx();
  const int nx = g.nx;
  const int ny = g.ny;
  const Complex* src = in.data();
  Complex* dst = out.data();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      dst[static_cast<std::size_t>(i) * ny + j] = dx_at(src, i, j, nx, ny, h, order);
    }
  }
}

void derivative_y(const GridSpec& g, std::span<const Complex> in, std::span<Complex> out,
                  int order) {
  check_sizes(g, in.size(), out.size());
  const auto kernel = spectral_kernel(g.ny, g.y_max - g.y_min, order);
  const int ny = g.ny;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < g.nx; ++i) {
    const std::size_t off = static_cast<std::size_t>(i) * ny;
    dy_row(in.data() + off, out.data() + off, ny, kernel);
  }
}

Complex inner_product(const GridSpec& g, std::span<const double> w, std::span<const Complex> a,
                      std::span<const Complex> b) {
  check_sizes(g, a.size(), b.size());
  std::vector<Complex> rows(g.nx);
  const int ny = g.ny;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < g.nx; ++i) {
    const std::size_t off = static_cast<std::size_t>(i) * ny;
    rows[i] = (w[i] * trapezoid_x(g, i)) * row_inner(a.data() + off, b.data() + off, ny);
  }
  Complex total = 0.0;
  for (const Complex& r : rows) total += r;
  return total * g.hy();
}

double weighted_norm(const GridSpec& g, std::span<const double> w, std::span<const Complex> a,
                     int margin) {
  check_sizes(g, a.size(), a.size());
  std::vector<double> rows(g.nx, 0.0);
  const int ny = g.ny;
#pragma omp parallel for schedule(static)
  for (int i = margin; i < g.nx - margin; ++i) {
    rows[i] = w[i] * g.hx() * row_norm2(a.data() + static_cast<std::size_t>(i) * ny, ny);
  }
  double total = 0.0;
  for (int i = margin; i < g.nx - margin; ++i) total += rows[i];
  return std::sqrt(total * g.hy());
}

}  // namespace parallel
}  // namespace morseband::kernels
