#include "cmrep/qcore/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cmrep/error.hpp"
#include "cmrep/qcore/eig.hpp"

namespace cmrep::qcore {

namespace {

// Square roots of the eigenvalues of a Hermitian PSD product. Eigenvalues
// within roundoff of zero are zeroed first: sqrt would lift 1e-17 to 3e-9.
std::vector<double> root_eigenvalues(const ComplexMatrix& m) {
    auto values = hermitian_eigenvalues(m);
    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * double(values.size()) * scale;
    for (double& v : values) v = v > floor ? std::sqrt(v) : 0.0;
    return values;
}

double sum_of_roots(const ComplexMatrix& m) {
    double s = 0.0;
    for (double v : root_eigenvalues(m)) s += v;
    return s;
}

ComplexMatrix symmetrized(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

double concurrence(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw ShapeError("concurrence: two-qubit (4x4) state required");
    const ComplexMatrix yy = kron(ops::pauli_y(), ops::pauli_y());
    const ComplexMatrix flipped = yy * rho.conjugate() * yy;
    const ComplexMatrix root = matrix_sqrt_psd(rho);
    auto lambda = root_eigenvalues(symmetrized(root * flipped * root));
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
    return std::clamp(c, 0.0, 1.0);
}

double concurrence(const DensityMatrix& rho) { return concurrence(rho.matrix()); }

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw ShapeError("fidelity: dimension mismatch");
    const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
    const double t = sum_of_roots(symmetrized(root * sigma.matrix() * root));
    return std::clamp(t * t, 0.0, 1.0);
}

double overlap_fidelity(const DensityMatrix& rho, std::span<const Complex> ket) {
    if (ket.size() != rho.dim()) throw ShapeError("overlap_fidelity: dimension mismatch");
    const auto v = rho.matrix().apply(ket);
    Complex s = 0.0;
    for (std::size_t i = 0; i < ket.size(); ++i) s += std::conj(ket[i]) * v[i];
    return std::clamp(s.real(), 0.0, 1.0);
}

}  // namespace cmrep::qcore
