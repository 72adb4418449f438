#include "radial/spectrum.hpp"

#include <string>
#include <utility>

namespace radial {

SpectrumResult solve_spectrum(std::shared_ptr<const CollocationGrid> grid,
                              const RadialMap& map,
                              const PotentialSpec& potential, int ell,
                              const UnitConvention& convention,
                              const SpectrumOptions& options) {
  if (options.states < 1) {
    throw domain_error("solve_spectrum: need at least one state");
  }
  HamiltonianProblem problem =
      assemble(std::move(grid), map, potential, ell, convention);
  const Index m = problem.matrix.rows();
  const EigenDecomposition eig = eigs_symmetric(problem.matrix, m);

  SpectrumResult result{problem.potential, ell,         problem.convention,
                        problem.grid,      problem.map, {},
                        {}};
  const std::optional<Real> limit =
      options.bound_filter ? potential.asymptote() : std::nullopt;

  for (Index k = 0; k < m && std::ssize(result.states) < options.states; ++k) {
    const Real energy = eig.values[k];
    if (limit && energy >= *limit) break;  // ascending: nothing bound beyond
    const Vector a = eig.vectors.col(k);
    Vector u = reconstruct_wavefunction(problem, a);
    u = normalize(u, *problem.grid, problem.map);

    RadialState state{ell,          static_cast<int>(result.states.size()),
                      energy,       std::move(u),
                      problem.grid, problem.map,
                      problem.convention};
    const int nodes = count_interior_nodes(state.u);
    if (nodes != state.n) {
      throw numerical_error(
          "solve_spectrum: state " + std::to_string(state.n) + " of ell = " +
          std::to_string(ell) + " has " + std::to_string(nodes) +
          " interior nodes; grid too coarse or spurious box state");
    }
    result.residuals.push_back(
        (problem.matrix * a - energy * a).norm());
    result.states.push_back(std::move(state));
  }
  return result;
}

}  // namespace radial
