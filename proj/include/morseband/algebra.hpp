#pragma once

// su(1,1) generators as grid differential operators on band states:
//   L+ = (a0/2pi) e^{-2pi i y/a0} (-d/dx + i d/dy + (e B0 a0 / pi hbar c) e^{-2pi x/a0})
//   L- = (a0/2pi) e^{+2pi i y/a0} ( d/dx + i d/dy)
//   L3 = i (a0/2pi) d/dy
// x derivatives are 5-point finite differences, y derivatives spectral.

#include <functional>

#include "morseband/grid.hpp"
#include "morseband/model.hpp"

namespace morseband::algebra {

struct OperatorResult {
  SampledState output;
  double residual_norm = 0.0;  // relative, margin-excluded weighted norm
};

SampledState apply_Lplus(const SampledState& s, const PhysParams& p);
SampledState apply_Lminus(const SampledState& s, const PhysParams& p);
SampledState apply_L3(const SampledState& s, const PhysParams& p);

// C = L+ L- - L3^2 + L3 ; residual ||C s + l(l+1) s|| / ||s||
OperatorResult apply_casimir(const SampledState& s, const PhysParams& p);
// H = (2 pi^2 hbar^2 / mu a0^2)(L+ L- + L3 - 1/4) ; residual ||H s - E s|| / (E ||s||)
OperatorResult apply_hamiltonian(const SampledState& s, const PhysParams& p);
// Same compositions without labels.
SampledState casimir(const SampledState& s, const PhysParams& p);
SampledState hamiltonian(const SampledState& s, const PhysParams& p);

// a x + b y on a shared grid
SampledState lincomb(Complex a, const SampledState& x, Complex b, const SampledState& y);

// ||out - lambda s|| / (scale ||s||), margin-excluded weighted norms
double relative_residual(const SampledState& out, const SampledState& s, Complex lambda,
                         double scale = 1.0);

using Operator = std::function<SampledState(const SampledState&)>;

// [A, B] s
SampledState commutator(const Operator& A, const Operator& B, const SampledState& s);

}  // namespace morseband::algebra
