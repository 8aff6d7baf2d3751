#include "cmrep/qcore/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cmrep/error.hpp"

namespace cmrep::qcore {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& m) {
    if (!m.is_square()) throw ShapeError("hermitian_eig: matrix is not square");
    const double herr = m.hermiticity_error();
    if (herr > kHermitianTolerance)
        throw ValidationError("hermitian_eig: matrix is not Hermitian (error " + std::to_string(herr) + ")");

    const std::size_t n = m.rows();
    // Symmetrize so rounding noise in the input cannot stall convergence.
    ComplexMatrix a = 0.5 * (m + m.adjoint());
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(a.frobenius_norm(), 1e-300);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-15 * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                // Rotate in the (p, q) plane so that a(p, q) vanishes.
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                const Complex phase = apq / mag;  // e^{i phi}
                // Columns: a <- a J, where J = [[c, s e^{i phi}], [-s e^{-i phi}, c]].
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                }
                // Rows: a <- J^dagger a
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, q) = s * phase * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return hermitian_eig(m).values; }

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
    const auto [values, vectors] = hermitian_eig(m);
    const std::size_t n = values.size();
    std::vector<Complex> root(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (values[k] < -kPsdClampWindow)
            throw PsdError("matrix_sqrt_psd: eigenvalue " + std::to_string(values[k]) + " below -1e-9");
        root[k] = std::sqrt(std::max(values[k], 0.0));
    }
    return vectors * ComplexMatrix::diagonal(root) * vectors.adjoint();
}

}  // namespace cmrep::qcore
