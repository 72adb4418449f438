#include "radial/mapping.hpp"

#include <cmath>

namespace radial {

namespace {

void check_x(Real x) {
  if (std::fabs(x) > 1.0L) {
    throw domain_error("radial map: x outside [-1,1]");
  }
}

}  // namespace

Real RadialMap::forward(Real x) const {
  check_x(x);
  return scale * (1.0L + x) / (1.0L - x + alpha);
}

Real RadialMap::inverse(Real r) const {
  if (r < 0.0L || r > r_max) {
    throw domain_error("radial map: r outside [0, r_max]");
  }
  return (r * (1.0L + alpha) - scale) / (r + scale);
}

Real RadialMap::jacobian(Real x) const {
  check_x(x);
  const Real d = 1.0L - x + alpha;
  return scale * (2.0L + alpha) / (d * d);
}

RadialMap map_from_rmax_alpha(Real r_max, Real alpha) {
  if (!(r_max > 0.0L) || !(alpha > 0.0L)) {
    throw domain_error("radial map: r_max and alpha must be positive");
  }
  return {alpha * r_max / 2.0L, alpha, r_max};
}

RadialMap map_from_scale_alpha(Real scale, Real alpha) {
  if (!(scale > 0.0L) || !(alpha > 0.0L)) {
    throw domain_error("radial map: scale and alpha must be positive");
  }
  return {scale, alpha, 2.0L * scale / alpha};
}

Real map_forward(const RadialMap& map, Real x) { return map.forward(x); }

MapJacobians map_jacobians(const RadialMap& map, Real x) {
  check_x(x);
  const Real d = 1.0L - x + map.alpha;
  const Real common = map.scale * (2.0L + map.alpha);
  const Real d2 = d * d;
  return {common / d2, 2.0L * common / (d2 * d), 6.0L * common / (d2 * d2)};
}

Real vm(const RadialMap& map, Real x) {
  return vm_from_jacobians(map_jacobians(map, x));
}

Real vm_from_jacobians(const MapJacobians& jac) {
  const Real r1sq = jac.r1 * jac.r1;
  return (3.0L * jac.r2 * jac.r2 - 2.0L * jac.r3 * jac.r1) /
         (8.0L * r1sq * r1sq);
}

}  // namespace radial
