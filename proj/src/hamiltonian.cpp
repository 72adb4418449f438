#include "radial/hamiltonian.hpp"

#include <cmath>
#include <string>

namespace radial {

UnitConvention UnitConvention::from_name(std::string_view name) {
  if (name == "au") return atomic();
  if (name == "hbar2m1") return hbar2m1();
  throw domain_error("unknown unit convention '" + std::string(name) +
                     "' (expected 'au' or 'hbar2m1')");
}

std::string_view UnitConvention::name() const {
  if (kinetic_coefficient == 0.5L) return "au";
  if (kinetic_coefficient == 1.0L) return "hbar2m1";
  throw domain_error("unit convention has a non-standard coefficient");
}

Real effective_potential(const PotentialSpec& potential, int ell, Real r,
                         const UnitConvention& convention) {
  if (ell < 0) throw domain_error("effective_potential: ell must be >= 0");
  const Real centrifugal =
      convention.kinetic_coefficient * Real(ell) * (ell + 1) / (r * r);
  return eval_potential(potential, r) + centrifugal;
}

Matrix symmetrized_d2(const CollocationGrid& grid, const RadialMap& map) {
  Vector rp(grid.size());
  for (Index j = 0; j < grid.size(); ++j) {
    rp[j] = map.jacobian(grid.nodes[j]);
  }
  return symmetrized_d2(grid, rp);
}

Matrix symmetrized_d2(const CollocationGrid& grid, const Vector& jacobians) {
  const int n = grid.order;
  if (jacobians.size() != grid.size()) {
    throw domain_error("symmetrized_d2: need one Jacobian per node");
  }
  const Matrix s = basis_symmetrized_d2(grid);
  const Vector& rp = jacobians;

  Matrix m(n - 1, n - 1);
  for (int k = 1; k < n; ++k) {
    for (int j = 1; j < n; ++j) {
      m(k - 1, j - 1) = s(k, j) / (rp[k] * rp[j]);
    }
  }

  Real asym = 0.0L, scale = 0.0L;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = i; j < m.cols(); ++j) {
      asym = std::max(asym, std::fabs(m(i, j) - m(j, i)));
      scale = std::max(scale, std::fabs(m(i, j)));
    }
  }
  if (asym > 1e-8L * scale) {
    throw numerical_error("symmetrized_d2: asymmetry above diagnostic bound");
  }

  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = i + 1; j < m.cols(); ++j) {
      const Real avg = 0.5L * (m(i, j) + m(j, i));
      m(i, j) = avg;
      m(j, i) = avg;
    }
  }
  return m;
}

HamiltonianProblem assemble(std::shared_ptr<const CollocationGrid> grid,
                            const RadialMap& map,
                            const PotentialSpec& potential, int ell,
                            const UnitConvention& convention) {
  if (!grid) throw domain_error("assemble: null grid");
  if (ell < 0) throw domain_error("assemble: ell must be >= 0");
  const int n = grid->order;
  const Real c = convention.kinetic_coefficient;

  Matrix h = -c * symmetrized_d2(*grid, map);
  for (int j = 1; j < n; ++j) {
    const Real x = grid->nodes[j];
    const Real r = map.forward(x);
    Real v;
    try {
      v = effective_potential(potential, ell, r, convention);
    } catch (const std::exception& e) {
      throw numerical_error("assemble: potential evaluation failed at node " +
                            std::to_string(j) + ", r = " +
                            std::to_string(static_cast<double>(r)) + ": " +
                            e.what());
    }
    h(j - 1, j - 1) += v + vm(map, x);
  }
  return {std::move(grid), map, potential, ell, convention, std::move(h)};
}

Vector reconstruct_wavefunction(const HamiltonianProblem& problem,
                                const Vector& eigvec) {
  const int n = problem.grid->order;
  if (eigvec.size() != n - 1) {
    throw domain_error("reconstruct_wavefunction: expected N-1 coefficients");
  }
  Vector u = Vector::Zero(n + 1);
  for (int j = 1; j < n; ++j) {
    const Real rp = problem.map.jacobian(problem.grid->nodes[j]);
    u[j] = eigvec[j - 1] * problem.grid->pn_values[j] / std::sqrt(rp);
  }
  const Real peak = u.cwiseAbs().maxCoeff();
  for (int j = 1; j < n; ++j) {
    if (std::fabs(u[j]) > 1e-14L * peak) {
      if (u[j] < 0) u = -u;
      break;
    }
  }
  return u;
}

}  // namespace radial
