#include "normclass/groebner/matrix.hpp"

#include "normclass/errors.hpp"

namespace normclass {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = GaussianRational(1);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
}

Matrix Matrix::shifted(const GaussianRational& lambda) const {
    Matrix r = *this;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) r(k, k) -= lambda;
    return r;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        GaussianRational inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            GaussianRational f = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return row_reduce(m).size();
}

Matrix Matrix::kernel() const {
    Matrix m = *this;
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(cols_, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], f) = GaussianRational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], f) = -m(r, free_cols[f]);
    }
    return k;
}

Matrix Matrix::restrict_to(const Matrix& basis) const {
    std::size_t n = basis.rows(), r = basis.cols();
    if (r == 0) return Matrix();
    Matrix image = *this * basis;
    Matrix aug(n, 2 * r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            aug(i, j) = basis(i, j);
            aug(i, r + j) = image(i, j);
        }
    auto pivots = row_reduce(aug);
    if (pivots.size() < r || pivots[r - 1] != r - 1) throw DomainError("basis columns are dependent");
    if (pivots.size() > r) throw DomainError("subspace is not invariant");
    Matrix c(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) c(i, j) = aug(i, r + j);
    return c;
}

Matrix Matrix::generalized_kernel() const {
    if (rows_ != cols_) throw DomainError("generalized kernel needs a square matrix");
    Matrix power = *this;
    std::size_t rank_prev = power.rank();
    for (std::size_t k = 1; k < rows_ && rank_prev > 0; ++k) {
        Matrix next = power * *this;
        std::size_t r = next.rank();
        if (r == rank_prev) break;
        power = std::move(next);
        rank_prev = r;
    }
    return power.kernel();
}

Matrix Matrix::column_block(const std::vector<std::size_t>& columns) const {
    Matrix r(rows_, columns.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < columns.size(); ++j) r(i, j) = (*this)(i, columns[j]);
    return r;
}

Matrix joint_generalized_kernel(const std::vector<Matrix>& ops) {
    if (ops.empty()) return Matrix();
    std::size_t n = ops.front().rows();
    Matrix basis = Matrix::identity(n);
    for (const auto& op : ops) {
        if (basis.cols() == 0) break;
        Matrix restricted = op.restrict_to(basis);
        Matrix k = restricted.generalized_kernel();
        basis = basis * k;
    }
    return basis;
}

} // namespace normclass
