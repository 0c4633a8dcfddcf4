#pragma once

#include <vector>

namespace psatz {

struct SymmetricEigen {
  std::vector<double> eigenvalues;                  // ascending
  std::vector<std::vector<double>> eigenvectors;    // eigenvectors[i] pairs with eigenvalues[i]
};

/// Cyclic Jacobi eigendecomposition of a dense symmetric matrix.
/// Sweeps until the off-diagonal Frobenius norm drops below 1e-14 times
/// the initial Frobenius norm. Intended for the small matrices this
/// library produces; input symmetry is assumed, not checked.
SymmetricEigen jacobi_eigen(std::vector<std::vector<double>> a);

/// Largest |eigenvalue| of a symmetric matrix (its spectral norm).
double spectral_norm(const std::vector<std::vector<double>>& a);

}  // namespace psatz
