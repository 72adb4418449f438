#pragma once

#include "radial/common.hpp"
#include "radial/eigensolve.hpp"
#include "radial/observables.hpp"

#include <memory>
#include <vector>

namespace radial {

struct SpectrumOptions {
  int states = 1;
  /// Drop eigenvalues at or above the potential's asymptotic value; such
  /// levels are artifacts of truncating a non-confining potential to a box.
  bool bound_filter = true;
};

/// Bound states of one (potential, ell) problem, ascending in energy.
struct SpectrumResult {
  PotentialSpec potential;
  int ell = 0;
  UnitConvention convention;
  std::shared_ptr<const CollocationGrid> grid;
  RadialMap map;
  std::vector<RadialState> states;
  std::vector<Real> residuals;  // ||H a - E a||_2 per kept eigenpair
};

/// Assemble, diagonalize, filter, and normalize. Fewer than options.states
/// states are returned when the box supports fewer bound levels. A state
/// whose interior node count disagrees with its position in the ascending
/// spectrum raises numerical_error.
SpectrumResult solve_spectrum(std::shared_ptr<const CollocationGrid> grid,
                              const RadialMap& map,
                              const PotentialSpec& potential, int ell,
                              const UnitConvention& convention,
                              const SpectrumOptions& options);

}  // namespace radial
