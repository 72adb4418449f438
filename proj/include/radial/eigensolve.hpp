#pragma once

#include "radial/common.hpp"

namespace radial {

/// Ascending eigenvalues with column-orthonormal eigenvectors.
struct EigenDecomposition {
  Vector values;   // k, non-decreasing
  Matrix vectors;  // M x k
};

/// First k eigenpairs of a dense symmetric matrix. Input asymmetry above
/// 1e-12 relative is rejected. Each eigenvector's sign is fixed so its first
/// component of significant magnitude is positive, making the output
/// deterministic for identical input.
EigenDecomposition eigs_symmetric(const Matrix& matrix, Index k);

}  // namespace radial
