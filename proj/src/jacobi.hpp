#pragma once

#include <vector>

#include "clifford.hpp"

namespace spinbound {

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k belongs to values[k]
  int sweeps = 0;
};

// Cyclic complex Jacobi. Converged when the off-diagonal Frobenius norm is at
// most 1e-13 of the full norm; gives up after 100 sweeps. Throws
// Error(kNumeric) when the Hermiticity residual exceeds 1e-10 (relative).
HermitianEigen hermitian_eigensystem(const CMatrix& mat);

std::vector<double> hermitian_eigenvalues(const CMatrix& mat);

// Real symmetric convenience wrapper.
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& mat);

}  // namespace spinbound
