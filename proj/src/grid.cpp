#include "morseband/grid.hpp"

#include <cmath>
#include <string>

#include "morseband/errors.hpp"

namespace morseband {

void GridSpec::validate() const {
  if (!(x_min < x_max)) throw DomainError("GridSpec: x_min must be < x_max");
  if (!(y_min < y_max)) throw DomainError("GridSpec: y_min must be < y_max");
  if (nx < 8 || ny < 8) {
    throw DomainError("GridSpec: nx and ny must be >= 8, got " + std::to_string(nx) + "x" +
                      std::to_string(ny));
  }
}

GridSpec band_grid(const PhysParams& p, int nx, int ny, double u_lo, double u_hi) {
  p.validate();
  if (!(u_lo > 0.0 && u_lo < u_hi)) throw DomainError("band_grid: need 0 < u_lo < u_hi");
  const double k = p.wavenumber();
  const double ln_beta = std::log(p.beta());
  GridSpec g;
  g.x_min = (ln_beta - std::log(u_hi)) / k;
  g.x_max = (ln_beta - std::log(u_lo)) / k;
  g.nx = nx;
  g.y_min = -0.5 * p.a0;
  g.y_max = 0.5 * p.a0;
  g.ny = ny;
  g.validate();
  return g;
}

GridSpec plane_grid(double half_width, int nx, int ny) {
  GridSpec g;
  g.x_min = -half_width;
  g.x_max = half_width;
  g.nx = nx;
  g.y_min = -half_width;
  g.y_max = half_width;
  g.ny = ny;
  g.validate();
  return g;
}

SampledState::SampledState(const GridSpec& g, std::vector<double> w)
    : grid(g), values(g.size()), weight(std::move(w)) {
  if (weight.size() != static_cast<std::size_t>(g.nx)) {
    throw GridMismatchError("SampledState: weight length must equal nx");
  }
}

SampledState SampledState::zeros_like() const { return SampledState(grid, weight); }

void require_compatible(const SampledState& a, const SampledState& b) {
  if (!(a.grid == b.grid)) throw GridMismatchError("states live on different grids");
  if (a.weight != b.weight) throw GridMismatchError("states carry different weights");
}

}  // namespace morseband
