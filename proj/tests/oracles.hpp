#pragma once

// Test-only reference routines. Nothing here calls into the library's
// linear algebra; conversions go through raw entries.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "cmrep/qcore/matrix.hpp"

namespace oracle {

using CMat = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline CMat to_eigen(const cmrep::qcore::ComplexMatrix& m) {
    CMat out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

inline cmrep::qcore::ComplexMatrix from_eigen(const CMat& m) {
    cmrep::qcore::ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

/// Random mixed state: G G^dagger / tr, G with Gaussian entries and the
/// given rank.
inline CMat random_density(std::size_t dim, std::mt19937_64& rng, std::size_t rank = 0) {
    if (rank == 0) rank = dim;
    std::normal_distribution<double> n(0.0, 1.0);
    CMat g(dim, rank);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < rank; ++c) g(r, c) = cd(n(rng), n(rng));
    CMat rho = g * g.adjoint();
    return rho / rho.trace().real();
}

inline CMat random_hermitian(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    CMat g(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) g(r, c) = cd(n(rng), n(rng));
    return 0.5 * (g + g.adjoint());
}

/// Concurrence from the eigenvalues of the non-Hermitian product
/// rho (Y x Y) rho* (Y x Y), via a general complex eigensolver.
inline double concurrence_brute_force(const CMat& rho) {
    CMat y(2, 2);
    y << 0, cd(0, -1), cd(0, 1), 0;
    CMat yy = Eigen::kroneckerProduct(y, y);
    CMat r = rho * yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<CMat> es(r);
    std::vector<double> l;
    for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i).real())));
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

}  // namespace oracle

#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

/// exp(L t) applied to vec(rho0), with L the column-stacked Liouvillian
/// built directly from H and the raw (already sqrt-scaled) jump operators.
inline CMat liouvillian_propagate(const CMat& h, const std::vector<CMat>& jumps, const CMat& rho0, double t) {
    const Eigen::Index d = h.rows();
    const CMat id = CMat::Identity(d, d);
    CMat l = cd(0, -1) * (Eigen::kroneckerProduct(id, h) - Eigen::kroneckerProduct(h.transpose(), id)).eval();
    for (const auto& j : jumps) {
        const CMat jdj = j.adjoint() * j;
        l += Eigen::kroneckerProduct(j.conjugate(), j);
        l -= 0.5 * Eigen::kroneckerProduct(id, jdj);
        l -= 0.5 * Eigen::kroneckerProduct(jdj.transpose(), id);
    }
    Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(rho0.data(), d * d);
    const CMat prop = (l * t).exp();
    Eigen::VectorXcd out = prop * v;
    return Eigen::Map<CMat>(out.data(), d, d);
}

}  // namespace oracle

namespace oracle {

struct BsmOracleResult {
    double probability;
    CMat post;  // 4x4 on the two unmeasured qubits, corrected
};

/// Bell-state measurement written out index by index on a 16-dim state.
/// Qubit 0 is the most significant bit. Outcome j follows the table order
/// psi+, psi-, phi+, phi-; the correction acts on the later unmeasured qubit.
inline BsmOracleResult bsm_brute_force(const CMat& rho, int qa, int qb, int j) {
    const double h = 1.0 / std::sqrt(2.0);
    const double kets[4][4] = {{0, h, h, 0}, {0, h, -h, 0}, {h, 0, 0, h}, {h, 0, 0, -h}};
    CMat corr(2, 2);
    switch (j) {
        case 0: corr << 1, 0, 0, -1; break;         // Z
        case 1: corr << 1, 0, 0, 1; break;          // I
        case 2: corr << 0, 1, -1, 0; break;         // Z X
        default: corr << 0, 1, 1, 0; break;         // X
    }
    auto bit = [](int idx, int q) { return (idx >> (3 - q)) & 1; };
    int rest[2], k = 0;
    for (int q = 0; q < 4; ++q)
        if (q != qa && q != qb) rest[k++] = q;

    // Projected (unnormalized) state.
    CMat projected = CMat::Zero(16, 16);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
            cd acc = 0;
            for (int r2 = 0; r2 < 16; ++r2)
                for (int c2 = 0; c2 < 16; ++c2) {
                    // <r|P|r2> rho(r2,c2) <c2|P|c>
                    if (bit(r, rest[0]) != bit(r2, rest[0]) || bit(r, rest[1]) != bit(r2, rest[1])) continue;
                    if (bit(c, rest[0]) != bit(c2, rest[0]) || bit(c, rest[1]) != bit(c2, rest[1])) continue;
                    const double pr = kets[j][2 * bit(r, qa) + bit(r, qb)] * kets[j][2 * bit(r2, qa) + bit(r2, qb)];
                    const double pc = kets[j][2 * bit(c2, qa) + bit(c2, qb)] * kets[j][2 * bit(c, qa) + bit(c, qb)];
                    if (pr == 0.0 || pc == 0.0) continue;
                    acc += pr * rho(r2, c2) * pc;
                }
            projected(r, c) = acc;
        }
    const double prob = projected.trace().real();
    CMat reduced = CMat::Zero(4, 4);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
            if (bit(r, qa) != bit(c, qa) || bit(r, qb) != bit(c, qb)) continue;
            reduced(2 * bit(r, rest[0]) + bit(r, rest[1]), 2 * bit(c, rest[0]) + bit(c, rest[1])) += projected(r, c);
        }
    if (prob > 0) reduced /= prob;
    CMat u = Eigen::kroneckerProduct(CMat::Identity(2, 2), corr);
    return {prob, u * reduced * u.adjoint()};
}

}  // namespace oracle
