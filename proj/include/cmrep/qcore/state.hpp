#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmrep/qcore/eig.hpp"
#include "cmrep/qcore/hilbert.hpp"
#include "cmrep/qcore/matrix.hpp"

namespace cmrep::qcore {

inline constexpr double kTraceTolerance = 1e-6;
inline constexpr double kPositivityTolerance = 1e-9;

/// Thresholds used when validating a density matrix.
struct StateTolerance {
    double hermiticity = kHermitianTolerance;
    double trace = kTraceTolerance;
    double min_eigenvalue = -kPositivityTolerance;
};

/**
 * Trace-one, Hermitian, positive-semidefinite operator over a labeled
 * tensor-product space. Construction validates every invariant and throws
 * ValidationError on failure; instances are immutable afterwards.
 */
class DensityMatrix {
public:
    DensityMatrix(HilbertSpec space, ComplexMatrix matrix, StateTolerance tol = {});

    static DensityMatrix from_ket(HilbertSpec space, std::span<const Complex> ket);
    /// Product basis state, one occupation digit per subsystem.
    static DensityMatrix basis(HilbertSpec space, const std::vector<std::size_t>& digits);
    static DensityMatrix maximally_mixed(HilbertSpec space);

    const HilbertSpec& space() const { return space_; }
    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }

    /// Same matrix under new subsystem labels (dimensions must agree).
    DensityMatrix relabeled(const std::vector<std::string>& labels) const;

    /// Diagonal in the product basis.
    std::vector<double> populations() const;

private:
    HilbertSpec space_;
    ComplexMatrix matrix_;
};

/// Throws ValidationError describing the first violated invariant.
void validate_density(const ComplexMatrix& m, std::size_t expected_dim, StateTolerance tol = {});

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep`, subsystems in their original order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep);

enum class BellKind { psi_plus, psi_minus, phi_plus, phi_minus };

/// Index j of the measurement table (psi+ = 0, psi- = 1, phi+ = 2, phi- = 3).
int bell_index(BellKind kind);
BellKind bell_kind_from_index(int j);
std::string_view bell_name(BellKind kind);
std::vector<Complex> bell_ket(BellKind kind);

/// Pure two-qubit Bell state over qubits labeled `labels`.
DensityMatrix bell_state(BellKind kind, const std::vector<std::string>& labels = {"A", "B"});

/// p |psi-><psi-| + (1 - p) I/4
DensityMatrix werner_state(double p, const std::vector<std::string>& labels = {"A", "B"});

}  // namespace cmrep::qcore
