#include "radial/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace radial {

namespace {

constexpr Real kPi = 3.14159265358979323846264338327950288L;

struct PolyEval {
  Real p;    // P_N
  Real dp;   // P'_N
  Real d2p;  // P''_N
};

// P_N, P'_N, P''_N at a strictly interior point.
PolyEval eval_interior(int n, Real x) {
  Real pm = 1.0L, p = x;
  for (int k = 2; k <= n; ++k) {
    Real next = ((2 * k - 1) * x * p - (k - 1) * pm) / k;
    pm = p;
    p = next;
  }
  const Real omx2 = 1.0L - x * x;
  const Real dp = n * (pm - x * p) / omx2;
  // from the Legendre differential equation
  const Real d2p = (2.0L * x * dp - Real(n) * (n + 1) * p) / omx2;
  return {p, dp, d2p};
}

}  // namespace

LegendrePair legendre_pair(int order, Real x) {
  if (order < 0) {
    throw domain_error("legendre_pair: order must be non-negative");
  }
  if (std::fabs(x) > 1.0L + 1e-12L) {
    throw domain_error("legendre_pair: |x| > 1");
  }
  x = std::clamp(x, -1.0L, 1.0L);
  if (order == 0) return {1.0L, 0.0L};
  if (order == 1) return {x, 1.0L};
  if (std::fabs(x) == 1.0L) {
    const Real sign = (x > 0 || order % 2 == 0) ? 1.0L : -1.0L;
    const Real dsign = (x > 0) ? 1.0L : ((order % 2 == 0) ? -1.0L : 1.0L);
    return {sign, dsign * Real(order) * (order + 1) / 2.0L};
  }
  const PolyEval e = eval_interior(order, x);
  return {e.p, e.dp};
}

CollocationGrid lgl_grid(int order) {
  if (order < 4) {
    throw domain_error("lgl_grid: order must be at least 4");
  }
  const int n = order;
  CollocationGrid grid;
  grid.order = n;
  grid.nodes = Vector::Zero(n + 1);
  grid.nodes[0] = -1.0L;
  grid.nodes[n] = 1.0L;

  // Interior nodes: roots of P'_N. Each lies in the half-open Chebyshev
  // interval around cos(pi (N-j)/N); Newton with a bisection fallback keeps
  // the iterate inside that bracket.
  for (int j = 1; j < n; ++j) {
    Real lo = std::cos(kPi * (n - j + 0.5L) / n);
    Real hi = std::cos(kPi * (n - j - 0.5L) / n);
    Real flo = eval_interior(n, lo).dp;
    Real x = std::cos(kPi * (n - j) / n);
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const PolyEval e = eval_interior(n, x);
      if (std::fabs(e.dp) < 1e-13L) {
        converged = true;
        break;
      }
      if ((e.dp > 0) == (flo > 0)) {
        lo = x;
      } else {
        hi = x;
      }
      const Real step = e.dp / e.d2p;
      Real next = x - step;
      if (!(next > lo) || !(next < hi)) {
        next = 0.5L * (lo + hi);
      }
      if (std::fabs(next - x) <= 2.0L * std::numeric_limits<Real>::epsilon() *
                                     (std::fabs(x) + 0.25L)) {
        x = next;
        converged = true;
        break;
      }
      x = next;
    }
    if (!converged) {
      // The residual floor of P'_N at a representable root grows ~ N^4 ulp,
      // so the absolute test above is only reachable for moderate N; the
      // step criterion has already placed x within one ulp of the root.
      const Real width = hi - lo;
      if (!(width > 0) || std::fabs(eval_interior(n, x).dp) >
                              1e-13L * Real(n) * n * n * n) {
        throw numerical_error("lgl_grid: Newton failed for interior node " +
                              std::to_string(j));
      }
    }
    grid.nodes[j] = x;
  }

  // Enforce exact symmetry about the origin.
  for (int j = 1; j <= n / 2; ++j) {
    const Real v = 0.5L * (grid.nodes[j] - grid.nodes[n - j]);
    grid.nodes[j] = v;
    grid.nodes[n - j] = -v;
  }
  if (n % 2 == 0) grid.nodes[n / 2] = 0.0L;

  grid.pn_values = Vector::Zero(n + 1);
  for (int j = 0; j <= n; ++j) {
    grid.pn_values[j] = legendre_pair(n, grid.nodes[j]).pn;
  }
  grid.pn_values[0] = (n % 2 == 0) ? 1.0L : -1.0L;
  grid.pn_values[n] = 1.0L;

  grid.weights = Vector::Zero(n + 1);
  for (int j = 0; j <= n; ++j) {
    const Real p = grid.pn_values[j];
    grid.weights[j] = 2.0L / (Real(n) * (n + 1) * p * p);
  }

  grid.d2 = second_derivative_matrix(grid);
  return grid;
}

Real cardinal_eval(const CollocationGrid& grid, Index j, Real x) {
  const int n = grid.order;
  if (j < 0 || j > n) {
    throw domain_error("cardinal_eval: node index out of range");
  }
  if (std::fabs(x) > 1.0L + 1e-12L) {
    throw domain_error("cardinal_eval: |x| > 1");
  }
  x = std::clamp(x, -1.0L, 1.0L);
  for (Index k = 0; k <= n; ++k) {
    if (x == grid.nodes[k]) return k == j ? 1.0L : 0.0L;
  }
  const LegendrePair lp = legendre_pair(n, x);
  return -(1.0L - x * x) * lp.dpn /
         (Real(n) * (n + 1) * grid.pn_values[j] * (x - grid.nodes[j]));
}

Matrix second_derivative_matrix(const CollocationGrid& grid) {
  const int n = grid.order;
  const Vector& x = grid.nodes;
  const Vector& p = grid.pn_values;

  // First-derivative matrix in closed form, then the standard identity
  // l_j''(x_k) = 2 l_j'(x_k) (l_k'(x_k) - 1/(x_k - x_j)) for k != j with the
  // diagonal fixed by zero row sums.
  Matrix d1(n + 1, n + 1);
  for (Index k = 0; k <= n; ++k) {
    for (Index j = 0; j <= n; ++j) {
      d1(k, j) = (k == j) ? 0.0L : p[k] / (p[j] * (x[k] - x[j]));
    }
  }
  d1(0, 0) = -Real(n) * (n + 1) / 4.0L;
  d1(n, n) = Real(n) * (n + 1) / 4.0L;

  Matrix d2(n + 1, n + 1);
  for (Index k = 0; k <= n; ++k) {
    Real diag = 0.0L;
    for (Index j = 0; j <= n; ++j) {
      if (j == k) continue;
      const Real v = 2.0L * d1(k, j) * (d1(k, k) - 1.0L / (x[k] - x[j]));
      d2(k, j) = v;
      diag -= v;
    }
    d2(k, k) = diag;
  }
  return d2;
}

Matrix basis_symmetrized_d2(const CollocationGrid& grid) {
  const Index m = grid.size();
  Matrix s(m, m);
  for (Index k = 0; k < m; ++k) {
    for (Index j = 0; j < m; ++j) {
      s(k, j) = grid.d2(k, j) * grid.pn_values[j] / grid.pn_values[k];
    }
  }
  return s;
}

}  // namespace radial
