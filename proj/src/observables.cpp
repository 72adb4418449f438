#include "radial/observables.hpp"

#include <cmath>

namespace radial {

Real quadrature_norm(const Vector& u, const CollocationGrid& grid,
                     const RadialMap& map) {
  Real sum = 0.0L;
  for (Index j = 0; j < grid.size(); ++j) {
    sum += grid.weights[j] * map.jacobian(grid.nodes[j]) * u[j] * u[j];
  }
  return sum;
}

Vector normalize(const Vector& u_raw, const CollocationGrid& grid,
                 const RadialMap& map) {
  if (u_raw.size() != grid.size()) {
    throw domain_error("normalize: sample count does not match grid");
  }
  const Real norm2 = quadrature_norm(u_raw, grid, map);
  if (!(norm2 > 0.0L)) {
    throw domain_error("normalize: zero wavefunction");
  }
  Vector u = u_raw / std::sqrt(norm2);
  const Real peak = u.cwiseAbs().maxCoeff();
  for (Index j = 0; j < u.size(); ++j) {
    if (std::fabs(u[j]) > 1e-14L * peak) {
      if (u[j] < 0) u = -u;
      break;
    }
  }
  return u;
}

Real expectation_rk(const RadialState& state, int k) {
  if (k < -1) {
    throw domain_error("expectation_rk: k must be >= -1");
  }
  const CollocationGrid& grid = *state.grid;
  Real sum = 0.0L;
  // endpoints contribute nothing (u vanishes there) and r = 0 would not
  // admit a finite r^-1 factor, so sum over interior nodes only
  for (Index j = 1; j + 1 < grid.size(); ++j) {
    const Real r = state.map.forward(grid.nodes[j]);
    sum += grid.weights[j] * state.map.jacobian(grid.nodes[j]) * state.u[j] *
           state.u[j] * std::pow(r, Real(k));
  }
  return sum;
}

std::vector<DensitySample> radial_density(const RadialState& state) {
  const CollocationGrid& grid = *state.grid;
  std::vector<DensitySample> out;
  out.reserve(grid.size());
  for (Index j = 0; j < grid.size(); ++j) {
    out.push_back({state.map.forward(grid.nodes[j]), state.u[j] * state.u[j]});
  }
  return out;
}

Real interpolate_u(const RadialState& state, Real r) {
  const CollocationGrid& grid = *state.grid;
  if (r < 0.0L || r > state.map.r_max) {
    throw domain_error("interpolate_u: r outside [0, r_max]");
  }
  const int n = grid.order;
  for (Index j = 0; j <= n; ++j) {
    if (r == state.map.forward(grid.nodes[j])) return state.u[j];
  }
  const Real x = state.map.inverse(r);
  for (Index j = 0; j <= n; ++j) {
    if (x == grid.nodes[j]) return state.u[j];
  }
  const LegendrePair lp = legendre_pair(n, x);
  const Real common = -(1.0L - x * x) * lp.dpn / (Real(n) * (n + 1));
  Real sum = 0.0L;
  for (Index j = 0; j <= n; ++j) {
    sum += state.u[j] * common / (grid.pn_values[j] * (x - grid.nodes[j]));
  }
  return sum;
}

int count_interior_nodes(const Vector& u) {
  const Real floor = 1e-9L * u.cwiseAbs().maxCoeff();
  int count = 0;
  Real prev = 0.0L;
  for (Index j = 1; j + 1 < u.size(); ++j) {
    if (std::fabs(u[j]) <= floor) continue;
    if (prev != 0.0L && ((u[j] > 0) != (prev > 0))) ++count;
    prev = u[j];
  }
  return count;
}

int count_density_peaks(const std::vector<DensitySample>& samples) {
  Real peak = 0.0L;
  for (const DensitySample& s : samples) peak = std::max(peak, s.density);
  const Real floor = 1e-10L * peak;
  int count = 0;
  for (std::size_t j = 1; j + 1 < samples.size(); ++j) {
    const Real d = samples[j].density;
    if (d > floor && d > samples[j - 1].density && d > samples[j + 1].density) {
      ++count;
    }
  }
  return count;
}

}  // namespace radial
