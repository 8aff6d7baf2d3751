#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cmrep::qcore {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-10;

/**
 * Dense complex matrix stored row-major.
 *
 * Every operator in the simulator (mode ladder operators, Pauli matrices,
 * Hamiltonians, density matrices) is one of these. Hilbert spaces never
 * exceed 16 dimensions, so there is no sparse path.
 */
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-by-row literal, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    /// |ket><ket|
    static ComplexMatrix projector(std::span<const Complex> ket);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const { return data_; }
    std::span<Complex> entries() { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    double max_abs() const;
    double frobenius_norm() const;
    /// max |A - A^dagger| entrywise
    double hermiticity_error() const;

    /// Entrywise comparison with an absolute tolerance.
    bool approx_equal(const ComplexMatrix& other, double tol = kDefaultTolerance) const;

    /// Matrix-vector product.
    std::vector<Complex> apply(std::span<const Complex> v) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    /// Exact entrywise equality.
    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);

/// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors);

/// [a, b]
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// {a, b}
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

namespace ops {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// Truncated bosonic lowering operator, a|n> = sqrt(n)|n-1>.
ComplexMatrix annihilation(std::size_t dim);
/// a^dagger a on a truncated mode.
ComplexMatrix number(std::size_t dim);

}  // namespace ops

}  // namespace cmrep::qcore
