#ifndef HEINZLAB_MATRIX_HPP
#define HEINZLAB_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "heinzlab/errors.hpp"

namespace heinzlab {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. Entries must stay finite.
class GeneralMatrix {
public:
    GeneralMatrix() = default;
    GeneralMatrix(std::size_t rows, std::size_t cols);  // zero-filled
    GeneralMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static GeneralMatrix identity(std::size_t n);
    static GeneralMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static GeneralMatrix from_real_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return data_; }

    GeneralMatrix adjoint() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

    GeneralMatrix& operator+=(const GeneralMatrix& other);
    GeneralMatrix& operator-=(const GeneralMatrix& other);
    GeneralMatrix& operator*=(Complex scalar);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

GeneralMatrix operator+(GeneralMatrix a, const GeneralMatrix& b);
GeneralMatrix operator-(GeneralMatrix a, const GeneralMatrix& b);
GeneralMatrix operator*(const GeneralMatrix& a, const GeneralMatrix& b);
GeneralMatrix operator*(Complex scalar, GeneralMatrix m);
GeneralMatrix operator*(GeneralMatrix m, Complex scalar);

/// Hermitian matrix. The constructor symmetrizes via (M + M*)/2, so the
/// stored entries satisfy entries[i][j] == conj(entries[j][i]) bit-for-bit.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const GeneralMatrix& m);

    static HermitianMatrix identity(std::size_t n);
    static HermitianMatrix diagonal(const std::vector<double>& d);
    static HermitianMatrix zero(std::size_t n);

    std::size_t dim() const { return data_.rows(); }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_(i, j); }
    const GeneralMatrix& matrix() const { return data_; }

    // Real-linear combinations preserve the stored symmetry exactly.
    HermitianMatrix& operator+=(const HermitianMatrix& other);
    HermitianMatrix& operator-=(const HermitianMatrix& other);
    HermitianMatrix& operator*=(double scalar);

private:
    GeneralMatrix data_;
    struct RawTag {};
    HermitianMatrix(GeneralMatrix data, RawTag) : data_(std::move(data)) {}
};

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator*(double scalar, HermitianMatrix m);

/// Solves H X = B for Hermitian positive definite H via Cholesky (LL*).
/// Throws DomainError if a pivot is not strictly positive. This is the
/// eigendecomposition-free solve used by the integral-representation path.
GeneralMatrix hpd_solve(const HermitianMatrix& h, const GeneralMatrix& b);

}  // namespace heinzlab

#endif
