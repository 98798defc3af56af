#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dilate/error.hpp"
#include "dilate/numeric.hpp"

namespace dilate {

class RatPolynomial;

/// Dense row-major matrix over an exact ring. Most operations in this library
/// want square matrices; rectangular ones appear only inside normal-form and
/// kernel computations.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows);

    static Matrix identity(std::size_t d);
    static Matrix from_columns(const std::vector<std::vector<T>>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    /// Dimension of a square matrix.
    std::size_t dim() const noexcept { return rows_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const;
    std::vector<T> row(std::size_t i) const;
    Matrix transpose() const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        for (const auto& x : r) data_.push_back(x);
    }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t d) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
    return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& columns) {
    if (columns.empty()) return {};
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != m.rows_) throw Error(ErrorCode::DimensionMismatch, "ragged columns");
        for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& a) {
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<T> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

void require_square(const IntMatrix& m, const char* what);
void require_square(const RatMatrix& m, const char* what);

RatMatrix to_rational(const IntMatrix& m);
bool is_integral(const RatMatrix& m);
/// Throws NotIntegral with the offending entry position as witness.
IntMatrix to_integer(const RatMatrix& m);

/// Least common multiple of all entry denominators.
Integer common_denominator(const RatMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);
Rational det(const RatMatrix& m);

/// Throws Singular when the matrix is not invertible.
RatMatrix inverse(const RatMatrix& m);

/// Monic det(xI - M), computed by the Faddeev-LeVerrier recursion.
RatPolynomial char_poly(const RatMatrix& m);

/// p(M) by Horner evaluation.
RatMatrix evaluate(const RatPolynomial& p, const RatMatrix& m);

/// Determinant of the submatrix on the given rows and columns.
Rational minor(const RatMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

}  // namespace dilate
