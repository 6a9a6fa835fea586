#pragma once

#include "cmfix/cyclotomic.hpp"
#include "cmfix/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmfix {

inline Rational field_inverse(const Rational& x) { return 1 / x; }
inline CyclotomicNumber field_inverse(const CyclotomicNumber& x) { return x.inverse(); }

/// A scalar of the same kind as proto with the given rational value.
inline Rational scalar_like(const Rational&, const Rational& value) { return value; }
inline CyclotomicNumber scalar_like(const CyclotomicNumber& proto, const Rational& value)
{
    return CyclotomicNumber(proto.order(), value);
}

/// Dense row-major matrix over an exact field. Keeps a zero of the right
/// kind so that cyclotomic matrices know their order even when empty.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T zero = T{})
        : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows * cols, zero_)
    {
    }

    static Matrix identity(std::size_t n, const T& zero = T{})
    {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = scalar_like(zero, Rational{1});
        }
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols, const T& zero = T{})
    {
        Matrix m(rows.size(), cols, zero);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) {
                throw std::invalid_argument("matrix rows have inconsistent lengths");
            }
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const T& zero() const noexcept { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& rhs)
    {
        require_same_shape(rhs, "addition");
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += rhs.data_[i];
        }
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs)
    {
        require_same_shape(rhs, "subtraction");
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= rhs.data_[i];
        }
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const T& s, Matrix a)
    {
        for (auto& x : a.data_) {
            x = s * x;
        }
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("matrix product shape mismatch: " + a.shape() + " * " + b.shape());
        }
        Matrix out(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t t = 0; t < a.cols_; ++t) {
                const T& x = a(i, t);
                if (is_zero(x)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out(i, j) += x * b(t, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const
    {
        Matrix out(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    T trace() const
    {
        require_square("trace");
        T s = zero_;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += (*this)(i, i);
        }
        return s;
    }

    bool is_zero_matrix() const
    {
        for (const auto& x : data_) {
            if (!is_zero(x)) {
                return false;
            }
        }
        return true;
    }

    /// Copies other into this matrix with its top-left corner at (r, c).
    void set_block(std::size_t r, std::size_t c, const Matrix& other)
    {
        if (r + other.rows_ > rows_ || c + other.cols_ > cols_) {
            throw std::invalid_argument("block does not fit");
        }
        for (std::size_t i = 0; i < other.rows_; ++i) {
            for (std::size_t j = 0; j < other.cols_; ++j) {
                (*this)(r + i, c + j) = other(i, j);
            }
        }
    }

    Matrix block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const
    {
        if (r + rows > rows_ || c + cols > cols_) {
            throw std::invalid_argument("block out of range");
        }
        Matrix out(rows, cols, zero_);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                out(i, j) = (*this)(r + i, c + j);
            }
        }
        return out;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> row_reduce()
    {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t p = row;
            while (p < rows_ && is_zero((*this)(p, col))) {
                ++p;
            }
            if (p == rows_) {
                continue;
            }
            swap_rows(p, row);
            const T inv = field_inverse((*this)(row, col));
            for (std::size_t j = col; j < cols_; ++j) {
                (*this)(row, j) = (*this)(row, j) * inv;
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || is_zero((*this)(i, col))) {
                    continue;
                }
                const T f = (*this)(i, col);
                for (std::size_t j = col; j < cols_; ++j) {
                    (*this)(i, j) -= f * (*this)(row, j);
                }
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const;

    /// Basis of the right kernel, one vector per entry.
    std::vector<std::vector<T>> nullspace() const
    {
        Matrix r = *this;
        const auto pivots = r.row_reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) {
            is_pivot[p] = true;
        }
        std::vector<std::vector<T>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) {
                continue;
            }
            std::vector<T> v(cols_, zero_);
            v[free] = scalar_like(zero_, Rational{1});
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                v[pivots[i]] = -r(i, free);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Throws std::domain_error if singular.
    Matrix inverse() const
    {
        require_square("inverse");
        Matrix aug(rows_, 2 * cols_, zero_);
        aug.set_block(0, 0, *this);
        aug.set_block(0, cols_, identity(rows_, zero_));
        const auto pivots = aug.row_reduce();
        if (pivots.size() < rows_ || (rows_ > 0 && pivots[rows_ - 1] >= cols_)) {
            throw std::domain_error("matrix is singular");
        }
        return aug.block(0, cols_, rows_, cols_);
    }

    std::vector<T> apply(const std::vector<T>& v) const
    {
        if (v.size() != cols_) {
            throw std::invalid_argument("vector length does not match matrix columns");
        }
        std::vector<T> out(rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!is_zero(v[j])) {
                    out[i] += (*this)(i, j) * v[j];
                }
            }
        }
        return out;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& other, const char* op) const
    {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw std::invalid_argument(std::string("matrix ") + op + " shape mismatch: " + shape() + " vs " +
                                        other.shape());
        }
    }
    void require_square(const char* op) const
    {
        if (rows_ != cols_) {
            throw std::invalid_argument(std::string(op) + " needs a square matrix, got " + shape());
        }
    }
    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

/// Fraction-free (Bareiss) rank after clearing denominators row by row.
std::size_t bareiss_rank(const Matrix<Rational>& m);

template <>
inline std::size_t Matrix<Rational>::rank() const
{
    return bareiss_rank(*this);
}

template <class T>
std::size_t Matrix<T>::rank() const
{
    Matrix r = *this;
    return r.row_reduce().size();
}

} // namespace cmfix
