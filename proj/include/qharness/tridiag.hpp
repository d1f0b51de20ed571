#pragma once

#include <vector>

namespace qh {

/// Spectrum of a symmetric tridiagonal matrix together with the first
/// component of each (normalized) eigenvector, sorted by ascending eigenvalue.
struct TridiagSpectrum {
  std::vector<double> values;
  std::vector<double> first_components;
};

/// Implicit-shift QL with the rotation product accumulated only into the row
/// needed for Gaussian quadrature weights. diag has length N, offdiag length
/// N-1 (offdiag[i] couples i and i+1). Throws EigenFailure on non-convergence.
TridiagSpectrum tridiag_eigen_first_row(std::vector<double> diag, std::vector<double> offdiag);

}  // namespace qh
