#include "cmrep/qcore/state.hpp"

#include <cmath>
#include <string>

#include "cmrep/error.hpp"
#include "cmrep/qcore/eig.hpp"

namespace cmrep::qcore {

void validate_density(const ComplexMatrix& m, std::size_t expected_dim, StateTolerance tol) {
    if (!m.is_square() || m.rows() != expected_dim)
        throw ShapeError("density matrix must be " + std::to_string(expected_dim) + "x" +
                         std::to_string(expected_dim) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    const double herr = m.hermiticity_error();
    if (herr > tol.hermiticity)
        throw ValidationError("density matrix not Hermitian (error " + std::to_string(herr) + ")");
    const Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0)) > tol.trace)
        throw ValidationError("density matrix trace " + std::to_string(tr.real()) + " is not 1");
    const auto values = hermitian_eigenvalues(m);
    if (!values.empty() && values.back() < tol.min_eigenvalue)
        throw ValidationError("density matrix has negative eigenvalue " + std::to_string(values.back()));
}

DensityMatrix::DensityMatrix(HilbertSpec space, ComplexMatrix matrix, StateTolerance tol)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
    validate_density(matrix_, space_.total_dim(), tol);
}

DensityMatrix DensityMatrix::from_ket(HilbertSpec space, std::span<const Complex> ket) {
    if (ket.size() != space.total_dim()) throw ShapeError("from_ket: ket length does not match space");
    double norm = 0.0;
    for (const auto& z : ket) norm += std::norm(z);
    if (norm <= 0.0) throw ValidationError("from_ket: zero vector");
    std::vector<Complex> unit(ket.begin(), ket.end());
    for (auto& z : unit) z /= std::sqrt(norm);
    return {std::move(space), ComplexMatrix::projector(unit)};
}

DensityMatrix DensityMatrix::basis(HilbertSpec space, const std::vector<std::size_t>& digits) {
    if (digits.size() != space.size()) throw ShapeError("basis: one digit per subsystem required");
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (digits[i] >= space.subsystems()[i].dim) throw RangeError("basis: occupation exceeds truncation");
    std::vector<Complex> ket(space.total_dim());
    ket[space.flat_index(digits)] = 1.0;
    return from_ket(std::move(space), ket);
}

DensityMatrix DensityMatrix::maximally_mixed(HilbertSpec space) {
    const std::size_t n = space.total_dim();
    return {std::move(space), (1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n)};
}

DensityMatrix DensityMatrix::relabeled(const std::vector<std::string>& labels) const {
    if (labels.size() != space_.size()) throw ShapeError("relabeled: label count mismatch");
    std::vector<Subsystem> subs = space_.subsystems();
    for (std::size_t i = 0; i < subs.size(); ++i) subs[i].label = labels[i];
    return {HilbertSpec(std::move(subs)), matrix_};
}

std::vector<double> DensityMatrix::populations() const {
    std::vector<double> p(dim());
    for (std::size_t i = 0; i < dim(); ++i) p[i] = matrix_(i, i).real();
    return p;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return {a.space().joined(b.space()), kron(a.matrix(), b.matrix())};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
    const HilbertSpec& space = rho.space();
    HilbertSpec kept = space.restricted_to(keep);
    std::vector<bool> is_kept(space.size(), false);
    for (const auto& k : keep) is_kept[space.index_of(k)] = true;

    const std::size_t n = space.total_dim();
    const auto& subs = space.subsystems();
    auto reduced_index = [&](const std::vector<std::size_t>& d) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (is_kept[i]) idx = idx * subs[i].dim + d[i];
        return idx;
    };

    ComplexMatrix out(kept.total_dim(), kept.total_dim());
    const ComplexMatrix& m = rho.matrix();
    for (std::size_t r = 0; r < n; ++r) {
        const auto dr = space.digits(r);
        for (std::size_t c = 0; c < n; ++c) {
            const auto dc = space.digits(c);
            bool traced_match = true;
            for (std::size_t i = 0; i < subs.size() && traced_match; ++i)
                if (!is_kept[i] && dr[i] != dc[i]) traced_match = false;
            if (traced_match) out(reduced_index(dr), reduced_index(dc)) += m(r, c);
        }
    }
    return {std::move(kept), std::move(out)};
}

int bell_index(BellKind kind) { return static_cast<int>(kind); }

BellKind bell_kind_from_index(int j) {
    if (j < 0 || j > 3) throw RangeError("Bell outcome index must be in 0..3");
    return static_cast<BellKind>(j);
}

std::string_view bell_name(BellKind kind) {
    switch (kind) {
        case BellKind::psi_plus: return "psi+";
        case BellKind::psi_minus: return "psi-";
        case BellKind::phi_plus: return "phi+";
        case BellKind::phi_minus: return "phi-";
    }
    return "?";
}

std::vector<Complex> bell_ket(BellKind kind) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case BellKind::psi_plus: return {0.0, h, h, 0.0};
        case BellKind::psi_minus: return {0.0, h, -h, 0.0};
        case BellKind::phi_plus: return {h, 0.0, 0.0, h};
        case BellKind::phi_minus: return {h, 0.0, 0.0, -h};
    }
    return {};
}

DensityMatrix bell_state(BellKind kind, const std::vector<std::string>& labels) {
    if (labels.size() != 2) throw ShapeError("bell_state: two labels required");
    return DensityMatrix::from_ket(HilbertSpec::qubits(labels), bell_ket(kind));
}

DensityMatrix werner_state(double p, const std::vector<std::string>& labels) {
    if (!(p >= 0.0 && p <= 1.0)) throw RangeError("werner_state: purity must lie in [0, 1]");
    if (labels.size() != 2) throw ShapeError("werner_state: two labels required");
    const auto singlet = bell_ket(BellKind::psi_minus);
    ComplexMatrix m = p * ComplexMatrix::projector(singlet) + ((1.0 - p) / 4.0) * ComplexMatrix::identity(4);
    return {HilbertSpec::qubits(labels), std::move(m)};
}

}  // namespace cmrep::qcore
