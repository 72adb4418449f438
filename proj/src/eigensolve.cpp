#include "radial/eigensolve.hpp"

#include <cmath>

namespace radial {

EigenDecomposition eigs_symmetric(const Matrix& matrix, Index k) {
  const Index m = matrix.rows();
  if (m < 1 || matrix.cols() != m) {
    throw domain_error("eigs_symmetric: matrix must be square and non-empty");
  }
  if (k < 1 || k > m) {
    throw domain_error("eigs_symmetric: k out of range");
  }
  const Real scale = matrix.cwiseAbs().maxCoeff();
  const Real asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12L * scale) {
    throw domain_error("eigs_symmetric: matrix is not symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("eigs_symmetric: iteration did not converge");
  }

  EigenDecomposition out;
  out.values = solver.eigenvalues().head(k);
  out.vectors = solver.eigenvectors().leftCols(k);
  for (Index c = 0; c < k; ++c) {
    auto col = out.vectors.col(c);
    const Real peak = col.cwiseAbs().maxCoeff();
    for (Index i = 0; i < m; ++i) {
      if (std::fabs(col[i]) > 1e-12L * peak) {
        if (col[i] < 0) col = -col;
        break;
      }
    }
  }
  return out;
}

}  // namespace radial
