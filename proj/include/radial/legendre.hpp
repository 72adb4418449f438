#pragma once

#include "radial/common.hpp"

namespace radial {

struct LegendrePair {
  Real pn;   // P_N(x)
  Real dpn;  // P'_N(x)
};

/// Evaluate P_N and P'_N by the three-term recurrence; endpoint derivatives
/// use the closed form P'_N(+-1) = (+-1)^(N+1) N(N+1)/2.
LegendrePair legendre_pair(int order, Real x);

/// Legendre-Gauss-Lobatto collocation data on the reference interval [-1,1].
///
/// nodes[0] = -1 and nodes[N] = +1 exactly; the interior nodes are the roots
/// of P'_N, stored ascending and symmetrized about zero. d2(k,j) holds the
/// second derivative of the j-th cardinal function at the k-th node.
struct CollocationGrid {
  int order = 0;     // N
  Vector nodes;      // N+1
  Vector pn_values;  // P_N at each node
  Vector weights;    // LGL quadrature weights, sum to 2
  Matrix d2;         // (N+1) x (N+1)

  Index size() const { return nodes.size(); }
};

/// Build the grid for a given order N >= 4. Interior nodes come from a
/// bracketed Newton iteration started at the Chebyshev-Lobatto points.
CollocationGrid lgl_grid(int order);

/// Cardinal function g_j evaluated at an arbitrary x in [-1,1]. At a grid
/// node this returns the Kronecker delta exactly.
Real cardinal_eval(const CollocationGrid& grid, Index j, Real x);

/// Second derivatives of the cardinal functions at the nodes, g_j''(x_k).
/// Exact on polynomials of degree <= N; entry (k,j) multiplies the sample at
/// node j when differentiating at node k.
Matrix second_derivative_matrix(const CollocationGrid& grid);

/// d2 rescaled by P_N(x_j)/P_N(x_k). The change of basis that divides nodal
/// coefficients by P_N makes the interior block of this matrix symmetric,
/// which is what the Hamiltonian assembly consumes.
Matrix basis_symmetrized_d2(const CollocationGrid& grid);

}  // namespace radial
