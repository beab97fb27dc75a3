#pragma once

#include "normclass/arith/gaussian.hpp"

#include <cstddef>
#include <vector>

namespace normclass {

/// Dense row-major matrix over Q(i) with exact elimination routines.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// this - lambda * I (square matrices).
    Matrix shifted(const GaussianRational& lambda) const;

    std::size_t rank() const;
    /// Basis of the right kernel, as columns of the returned matrix.
    Matrix kernel() const;
    /// Columns of `basis` restricted: returns C with this * basis = basis * C,
    /// assuming the column span of `basis` is invariant under this.
    Matrix restrict_to(const Matrix& basis) const;
    /// Basis (columns) of the generalized kernel: kernel of this^k for k large.
    Matrix generalized_kernel() const;

    Matrix column_block(const std::vector<std::size_t>& columns) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> a_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

/// Basis of the subspace (columns) on which every matrix in `ops` acts
/// nilpotently. The matrices must commute.
Matrix joint_generalized_kernel(const std::vector<Matrix>& ops);

} // namespace normclass
