#pragma once

#include "radial/common.hpp"
#include "radial/legendre.hpp"
#include "radial/mapping.hpp"
#include "radial/potential.hpp"

#include <memory>
#include <string_view>

namespace radial {

/// Kinetic-energy prefactor c: the radial operator is -c d^2/dr^2 with the
/// centrifugal term c l(l+1)/r^2. c = 1/2 is "au" (hbar = m = 1), c = 1 is
/// "hbar2m1" (hbar = 2m = 1).
struct UnitConvention {
  Real kinetic_coefficient = 0.5L;

  static UnitConvention atomic() { return {0.5L}; }
  static UnitConvention hbar2m1() { return {1.0L}; }
  static UnitConvention from_name(std::string_view name);
  std::string_view name() const;
};

Real effective_potential(const PotentialSpec& potential, int ell, Real r,
                         const UnitConvention& convention);

/// Interior block of the mapped second-derivative operator,
/// d2(k,j) / (r'(x_k) r'(x_j)) built from the basis-symmetrized d2. The
/// construction is symmetric up to roundoff; any residual asymmetry above
/// 1e-8 relative is treated as a build error, and the returned matrix is the
/// bitwise-symmetric average.
Matrix symmetrized_d2(const CollocationGrid& grid, const RadialMap& map);

/// Same with explicit nodal Jacobian values (one per node); lets alternative
/// map families reuse the assembly.
Matrix symmetrized_d2(const CollocationGrid& grid, const Vector& jacobians);

/// Discrete radial Hamiltonian on the interior nodes (Dirichlet boundaries
/// imposed by excluding the endpoints).
struct HamiltonianProblem {
  std::shared_ptr<const CollocationGrid> grid;
  RadialMap map;
  PotentialSpec potential;
  int ell = 0;
  UnitConvention convention;
  Matrix matrix;  // (N-1) x (N-1), bitwise symmetric
};

HamiltonianProblem assemble(std::shared_ptr<const CollocationGrid> grid,
                            const RadialMap& map,
                            const PotentialSpec& potential, int ell,
                            const UnitConvention& convention);

/// Nodal samples u(r_j) of the reduced radial wavefunction for one interior
/// eigenvector: u_j = a_j P_N(x_j) / sqrt(r'(x_j)), u_0 = u_N = 0, sign fixed
/// so the first nonzero sample from the origin is positive. Not normalized.
Vector reconstruct_wavefunction(const HamiltonianProblem& problem,
                                const Vector& eigvec);

}  // namespace radial
