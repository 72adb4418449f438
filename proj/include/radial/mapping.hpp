#pragma once

#include "radial/common.hpp"

namespace radial {

/// Algebraic map r(x) = L (1+x) / (1 - x + alpha) taking [-1,1] to
/// [0, r_max] with r_max = 2L/alpha. Points cluster near the origin for
/// small alpha and spread toward uniform as alpha grows.
struct RadialMap {
  Real scale = 0;  // L
  Real alpha = 0;
  Real r_max = 0;

  Real forward(Real x) const;   // r(x)
  Real inverse(Real r) const;   // x(r)
  Real jacobian(Real x) const;  // r'(x) > 0
};

struct MapJacobians {
  Real r1;  // r'
  Real r2;  // r''
  Real r3;  // r'''
};

/// Construct from the truncation radius and alpha; L = alpha * r_max / 2.
RadialMap map_from_rmax_alpha(Real r_max, Real alpha);

/// Construct from the length scale and alpha; r_max = 2 L / alpha.
RadialMap map_from_scale_alpha(Real scale, Real alpha);

Real map_forward(const RadialMap& map, Real x);
MapJacobians map_jacobians(const RadialMap& map, Real x);

/// Correction potential induced by the sqrt(r') similarity transform,
/// (3 r''^2 - 2 r''' r') / (8 r'^4). Identically zero for the algebraic map;
/// kept general so other map families can slot in.
Real vm(const RadialMap& map, Real x);
Real vm_from_jacobians(const MapJacobians& jac);

}  // namespace radial
