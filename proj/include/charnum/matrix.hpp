#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace charnum {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw error("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out[i] = (*this)(i, j);
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw error("matrix product: inner dimensions differ");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
    {
        if (a.cols_ != v.size())
            throw error("matrix-vector product: dimension mismatch");
        std::vector<T> out(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                out[i] += a(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<integer>;

/// Exact determinant by fraction-free (Bareiss) elimination.
inline integer det_int(IntMatrix m)
{
    if (!m.square())
        throw error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    integer sign = 1;
    integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Exact inverse over the rationals by Gauss-Jordan elimination. Throws when singular.
inline Matrix<rational> rational_inverse(const IntMatrix& a)
{
    if (!a.square())
        throw error("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = rational(a(i, j));
    auto inv = Matrix<rational>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0)
            ++p;
        if (p == n)
            throw error("matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        const rational pivot = m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) /= pivot;
            inv(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0)
                continue;
            const rational f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

/// adj(A) = det(A) * A^{-1}.
inline IntMatrix adjugate(const IntMatrix& a)
{
    const integer det = det_int(a);
    const std::size_t n = a.rows();
    IntMatrix out(n, n);
    if (det == 0) {
        // Singular: fall back to cofactors.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                IntMatrix minor(n - 1, n - 1);
                for (std::size_t r = 0, rr = 0; r < n; ++r) {
                    if (r == j)
                        continue;
                    for (std::size_t c = 0, cc = 0; c < n; ++c) {
                        if (c == i)
                            continue;
                        minor(rr, cc++) = a(r, c);
                    }
                    ++rr;
                }
                integer cof = det_int(minor);
                out(i, j) = ((i + j) % 2 == 0) ? cof : integer(-cof);
            }
        return out;
    }
    const auto inv = rational_inverse(a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rational v = inv(i, j) * rational(det);
            if (denominator(v) != 1)
                throw integrity_error("adjugate entry is not integral");
            out(i, j) = numerator(v);
        }
    return out;
}

/// Integer inverse of a matrix with determinant +1 or -1.
inline IntMatrix inverse_unimodular(const IntMatrix& a)
{
    if (!a.square())
        throw error("inverse of a non-square matrix");
    const integer det = det_int(a);
    if (det != 1 && det != -1)
        throw error("not unimodular: determinant is " + det.str());
    IntMatrix adj = adjugate(a);
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            adj(i, j) *= det; // divide by +-1
    return adj;
}

} // namespace charnum
