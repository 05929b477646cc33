#pragma once

#include <functional>
#include <vector>

#include "slocc/matrix.hpp"

namespace slocc {

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix (dimension <= 64).
/// Throws NonHermitian if |M - M^dagger| exceeds `hermitian_tol`.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double hermitian_tol = 1e-12);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol = 1e-12);

double min_eigenvalue(const ComplexMatrix& m, double hermitian_tol = 1e-12);

/// V f(D) V^dagger for Hermitian M = V D V^dagger.
ComplexMatrix hermitian_function(const ComplexMatrix& m, const std::function<double(double)>& f,
                                 double hermitian_tol = 1e-12);

}  // namespace slocc
