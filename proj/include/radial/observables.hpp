#pragma once

#include "radial/common.hpp"
#include "radial/hamiltonian.hpp"
#include "radial/legendre.hpp"
#include "radial/mapping.hpp"

#include <memory>
#include <vector>

namespace radial {

/// One bound state: normalized nodal samples of u(r) = r R(r) plus the grid
/// and map needed to integrate against them.
struct RadialState {
  int ell = 0;
  int n = 0;  // radial index = count of interior sign changes
  Real energy = 0;
  Vector u;  // N+1 samples, u[0] = u[N] = 0
  std::shared_ptr<const CollocationGrid> grid;
  RadialMap map;
  UnitConvention convention;
};

/// Quadrature norm integral u^2 dr as sum_j w_j r'(x_j) u_j^2.
Real quadrature_norm(const Vector& u, const CollocationGrid& grid,
                     const RadialMap& map);

/// Rescale so the quadrature norm is 1 and the first sample of significant
/// magnitude from the origin is positive. Rejects the zero vector.
Vector normalize(const Vector& u_raw, const CollocationGrid& grid,
                 const RadialMap& map);

/// <r^k> = integral u^2 r^k dr by LGL quadrature with the map Jacobian.
/// Requires k >= -1 (u ~ r^(l+1) keeps the integrand finite at the origin).
Real expectation_rk(const RadialState& state, int k);

struct DensitySample {
  Real r;
  Real density;  // u^2
};

std::vector<DensitySample> radial_density(const RadialState& state);

/// Cardinal interpolation of u at any r in [0, r_max]; reproduces the nodal
/// samples bit-exactly at the grid radii.
Real interpolate_u(const RadialState& state, Real r);

/// Sign changes of u over interior samples of significant magnitude.
int count_interior_nodes(const Vector& u);

/// Strict local maxima of the density above a relative noise floor.
int count_density_peaks(const std::vector<DensitySample>& samples);

}  // namespace radial
