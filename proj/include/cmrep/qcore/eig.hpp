#pragma once

#include <vector>

#include "cmrep/qcore/matrix.hpp"

namespace cmrep::qcore {

inline constexpr double kHermitianTolerance = 1e-9;
/// Eigenvalues in [-kPsdClampWindow, 0] are clamped to zero by PSD operations.
inline constexpr double kPsdClampWindow = 1e-9;

struct EigenSystem {
    std::vector<double> values;  ///< descending
    ComplexMatrix vectors;       ///< column k belongs to values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws ValidationError if `m` is not Hermitian within 1e-9.
EigenSystem hermitian_eig(const ComplexMatrix& m);

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Principal square root of a Hermitian PSD matrix.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

}  // namespace cmrep::qcore
