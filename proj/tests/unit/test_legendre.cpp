#include "radial/legendre.hpp"

#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

using namespace radial;

namespace {

// Horner evaluation of a coefficient polynomial (ascending powers).
Real poly_eval(const std::vector<Real>& coeff, Real x) {
  Real v = 0.0L;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<Real> poly_derivative(const std::vector<Real>& coeff) {
  std::vector<Real> d;
  for (std::size_t k = 1; k < coeff.size(); ++k) d.push_back(coeff[k] * Real(k));
  if (d.empty()) d.push_back(0.0L);
  return d;
}

// Cardinal polynomial of node j by direct Lagrange expansion. Independent of
// the differentiation-matrix construction; usable for small orders only.
std::vector<Real> cardinal_coefficients(const CollocationGrid& grid, Index j) {
  std::vector<Real> coeff = {1.0L};
  for (Index m = 0; m < grid.size(); ++m) {
    if (m == j) continue;
    const Real xm = grid.nodes[m];
    const Real den = grid.nodes[j] - xm;
    std::vector<Real> next(coeff.size() + 1, 0.0L);
    for (std::size_t k = 0; k < coeff.size(); ++k) {
      next[k + 1] += coeff[k] / den;
      next[k] -= coeff[k] * xm / den;
    }
    coeff = std::move(next);
  }
  return coeff;
}

}  // namespace

TEST_CASE("legendre_pair matches closed forms") {
  auto [p2, d2] = legendre_pair(2, 0.0L);
  CHECK(p2 == -0.5L);
  CHECK(d2 == 0.0L);

  for (int n : {1, 2, 5, 10, 31}) {
    auto [pn, dpn] = legendre_pair(n, 1.0L);
    CHECK(pn == 1.0L);
    CHECK(dpn == Real(n) * (n + 1) / 2.0L);
    auto [pm, dpm] = legendre_pair(n, -1.0L);
    CHECK(pm == (n % 2 == 0 ? 1.0L : -1.0L));
    CHECK(dpm == (n % 2 == 0 ? -1.0L : 1.0L) * Real(n) * (n + 1) / 2.0L);
  }

  CHECK(legendre_pair(0, 0.3L).pn == 1.0L);
  CHECK(legendre_pair(0, 0.3L).dpn == 0.0L);
  CHECK(legendre_pair(1, 0.3L).pn == 0.3L);
  CHECK(legendre_pair(1, 0.3L).dpn == 1.0L);

  // P'_3 has a root at sqrt(1/5); the truncated decimal sits within 5e-11
  CHECK(std::fabs(legendre_pair(3, 0.4472135955L).dpn) < 1e-8L);
  CHECK(std::fabs(legendre_pair(3, std::sqrt(0.2L)).dpn) < 1e-15L);

  CHECK_THROWS_AS(legendre_pair(4, 1.0L + 1e-6L), domain_error);
  CHECK_THROWS_AS(legendre_pair(-1, 0.0L), domain_error);
  CHECK_NOTHROW(legendre_pair(4, 1.0L + 1e-13L));
}

TEST_CASE("lgl_grid nodes and weights for N = 4") {
  const CollocationGrid grid = lgl_grid(4);
  const Real inner = std::sqrt(3.0L / 7.0L);
  CHECK(grid.nodes[0] == -1.0L);
  CHECK(grid.nodes[4] == 1.0L);
  CHECK(grid.nodes[2] == 0.0L);
  CHECK(std::fabs(grid.nodes[1] + inner) < 1e-18L);
  CHECK(std::fabs(grid.nodes[3] - inner) < 1e-18L);
  CHECK(std::fabs(grid.weights[0] - 0.1L) < 1e-18L);
  CHECK(std::fabs(grid.weights[4] - 0.1L) < 1e-18L);

  CHECK_THROWS_AS(lgl_grid(3), domain_error);
}

TEST_CASE("lgl_grid invariants across orders") {
  for (int n : {4, 7, 16, 33, 64}) {
    const CollocationGrid grid = lgl_grid(n);
    CHECK(grid.nodes[0] == -1.0L);
    CHECK(grid.nodes[n] == 1.0L);
    for (int j = 0; j < n; ++j) CHECK(grid.nodes[j] < grid.nodes[j + 1]);
    for (int j = 0; j <= n; ++j) {
      CHECK(grid.nodes[j] == -grid.nodes[n - j]);  // symmetrized exactly
      CHECK(grid.weights[j] > 0.0L);
    }
    for (int j = 1; j < n; ++j) {
      CHECK(std::fabs(legendre_pair(n, grid.nodes[j]).dpn) < 1e-13L);
    }
    CHECK(std::fabs(grid.weights.sum() - 2.0L) < 1e-13L);

    Real x2 = 0.0L;
    for (int j = 0; j <= n; ++j) {
      x2 += grid.weights[j] * grid.nodes[j] * grid.nodes[j];
    }
    CHECK(std::fabs(x2 - 2.0L / 3.0L) < 1e-13L);
  }
}

TEST_CASE("lgl_grid production order") {
  const int n = 300;
  const CollocationGrid grid = lgl_grid(n);
  CHECK(std::fabs(grid.weights.sum() - 2.0L) < 1e-13L);
  for (int j = 1; j < n; ++j) {
    CHECK(grid.nodes[j] == -grid.nodes[n - j]);
    // the scaled residual (1-x^2) P'_N / N stays at the rounding floor even
    // where P'' * ulp makes the raw |P'_N| bound unreachable
    const Real x = grid.nodes[j];
    const auto [p, dp] = legendre_pair(n, x);
    CHECK(std::fabs(dp) * (1.0L - x * x) / n < 1e-15L);
    CHECK(std::fabs(dp) < 1e-10L);
  }
}

TEST_CASE("quadrature is exact through degree 2N-1") {
  const CollocationGrid grid = lgl_grid(10);
  for (int k = 0; k <= 19; ++k) {
    Real sum = 0.0L;
    for (Index j = 0; j < grid.size(); ++j) {
      sum += grid.weights[j] * std::pow(grid.nodes[j], Real(k));
    }
    const Real exact = (k % 2 == 0) ? 2.0L / (k + 1) : 0.0L;
    CHECK(std::fabs(sum - exact) < 1e-12L);
  }

  const CollocationGrid big = lgl_grid(300);
  for (int k : {0, 1, 2, 57, 123, 598, 599}) {
    Real sum = 0.0L;
    for (Index j = 0; j < big.size(); ++j) {
      sum += big.weights[j] * std::pow(big.nodes[j], Real(k));
    }
    const Real exact = (k % 2 == 0) ? 2.0L / (k + 1) : 0.0L;
    CHECK(std::fabs(sum - exact) < 1e-12L);
  }
}

TEST_CASE("cardinal functions: delta property, partition of unity, linearity") {
  const CollocationGrid grid = lgl_grid(8);
  for (Index j = 0; j < grid.size(); ++j) {
    for (Index k = 0; k < grid.size(); ++k) {
      CHECK(cardinal_eval(grid, j, grid.nodes[k]) == (j == k ? 1.0L : 0.0L));
    }
  }

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Real x = dist(rng);
    Real unity = 0.0L, linear = 0.0L;
    for (Index j = 0; j < grid.size(); ++j) {
      const Real g = cardinal_eval(grid, j, x);
      unity += g;
      linear += g * grid.nodes[j];
    }
    CHECK(std::fabs(unity - 1.0L) < 1e-13L);
    CHECK(std::fabs(linear - x) < 1e-13L);
  }

  CHECK_THROWS_AS(cardinal_eval(grid, 9, 0.0L), domain_error);
  CHECK_THROWS_AS(cardinal_eval(grid, 0, 1.1L), domain_error);
}

TEST_CASE("cardinal interpolation reproduces polynomials of degree <= N") {
  const int n = 16;
  const CollocationGrid grid = lgl_grid(n);
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Real> coeff(n + 1);
  for (Real& c : coeff) c = dist(rng);

  for (int trial = 0; trial < 100; ++trial) {
    const Real x = dist(rng);
    Real interp = 0.0L;
    for (Index j = 0; j <= n; ++j) {
      interp += poly_eval(coeff, grid.nodes[j]) * cardinal_eval(grid, j, x);
    }
    CHECK(std::fabs(interp - poly_eval(coeff, x)) < 1e-10L);
  }
}

TEST_CASE("second derivative matrix: simple exactness checks") {
  const CollocationGrid grid = lgl_grid(12);
  const Matrix d2 = second_derivative_matrix(grid);

  const Vector ones = Vector::Ones(grid.size());
  CHECK((d2 * ones).cwiseAbs().maxCoeff() < 1e-10L);

  Vector sq(grid.size());
  for (Index j = 0; j < grid.size(); ++j) sq[j] = grid.nodes[j] * grid.nodes[j];
  CHECK(((d2 * sq).array() - 2.0L).abs().maxCoeff() < 1e-9L);
}

TEST_CASE("second derivative matrix: analytic derivative of x^N at N = 20") {
  const int n = 20;
  const CollocationGrid grid = lgl_grid(n);
  const Matrix d2 = second_derivative_matrix(grid);
  Vector mono(grid.size());
  for (Index j = 0; j < grid.size(); ++j) {
    mono[j] = std::pow(grid.nodes[j], Real(n));
  }
  const Vector der = d2 * mono;
  for (Index j = 1; j < grid.size() - 1; ++j) {
    const Real exact =
        Real(n) * (n - 1) * std::pow(grid.nodes[j], Real(n - 2));
    CHECK(std::fabs(der[j] - exact) <= 1e-7L * std::fabs(exact));
  }
}

TEST_CASE("second derivative matrix agrees with symbolic cardinal polynomials") {
  for (int n : {4, 6, 8}) {
    const CollocationGrid grid = lgl_grid(n);
    const Matrix d2 = second_derivative_matrix(grid);
    Real scale = d2.cwiseAbs().maxCoeff();
    for (Index j = 0; j < grid.size(); ++j) {
      const auto gpp =
          poly_derivative(poly_derivative(cardinal_coefficients(grid, j)));
      for (Index k = 0; k < grid.size(); ++k) {
        CHECK(std::fabs(d2(k, j) - poly_eval(gpp, grid.nodes[k])) <
              1e-10L * scale);
      }
    }
  }
}

TEST_CASE("spectral differentiation exact on random degree-N polynomial") {
  const int n = 16;
  const CollocationGrid grid = lgl_grid(n);
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Real> coeff(n + 1);
  for (Real& c : coeff) c = dist(rng);
  const auto second = poly_derivative(poly_derivative(coeff));

  Vector samples(grid.size());
  Real maxpp = 0.0L;
  for (Index j = 0; j < grid.size(); ++j) {
    samples[j] = poly_eval(coeff, grid.nodes[j]);
    maxpp = std::max(maxpp, std::fabs(poly_eval(second, grid.nodes[j])));
  }
  const Vector der = grid.d2 * samples;
  for (Index j = 0; j < grid.size(); ++j) {
    CHECK(std::fabs(der[j] - poly_eval(second, grid.nodes[j])) <=
          1e-8L * maxpp);
  }
}

TEST_CASE("basis-symmetrized d2 has the known closed forms inside") {
  const int n = 24;
  const CollocationGrid grid = lgl_grid(n);
  const Matrix s = basis_symmetrized_d2(grid);

  Real scale = 0.0L;
  for (int k = 1; k < n; ++k) {
    for (int j = 1; j < n; ++j) scale = std::max(scale, std::fabs(s(k, j)));
  }
  for (int k = 1; k < n; ++k) {
    const Real xk = grid.nodes[k];
    const Real diag = -Real(n) * (n + 1) / (3.0L * (1.0L - xk * xk));
    CHECK(std::fabs(s(k, k) - diag) <= 1e-12L * std::fabs(diag));
    for (int j = 1; j < n; ++j) {
      if (j == k) continue;
      CHECK(std::fabs(s(k, j) - s(j, k)) <= 1e-14L * scale);
      const Real dx = xk - grid.nodes[j];
      CHECK(std::fabs(s(k, j) + 2.0L / (dx * dx)) <=
            1e-12L * std::fabs(s(k, j)));
    }
  }
}
