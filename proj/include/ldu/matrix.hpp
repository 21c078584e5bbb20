#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "ldu/counters.hpp"
#include "ldu/errors.hpp"
#include "ldu/ring.hpp"

namespace ldu {

// Dense row-major matrix over the ring (T = Int) or its quotient field
// (T = Rat). The element kind is fixed per matrix; mixed products promote
// the ring operand first.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}
    Matrix(std::size_t r, std::size_t c, std::vector<T> entries)
        : rows_(r), cols_(c), data_(std::move(entries)) {
        if (data_.size() != r * c)
            throw ShapeMismatch("entry count does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero() const {
        for (const T& v : data_)
            if (v != T(0)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeMismatch("matrix addition shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeMismatch("matrix subtraction shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }

    // Dense product; counts the scalar multiplications it executes.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("matrix product shape mismatch: " + shape_str(a) + " * " +
                                shape_str(b));
        Matrix r(a.rows_, b.cols_);
        std::uint64_t mults = 0;
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                mults += b.cols_;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        }
        detail::add_mults(mults);
        return r;
    }

    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = s * m.data_[i];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Copy of the block at (r0, c0) with the given shape.
    Matrix block(std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) const {
        if (r0 + r > rows_ || c0 + c > cols_)
            throw ShapeMismatch("block exceeds matrix bounds");
        Matrix out(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

private:
    static std::string shape_str(const Matrix& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// The four equal quadrants of an even-sized square matrix.
template <typename T>
struct BlockQuad {
    Matrix<T> a11, a12, a21, a22;
};

template <typename T>
BlockQuad<T> split4(const Matrix<T>& m) {
    if (!m.is_square()) throw NonSquare("split4 requires a square matrix");
    if (m.rows() % 2 != 0) throw OddDimension("split4 requires an even dimension");
    std::size_t h = m.rows() / 2;
    return {m.block(0, 0, h, h), m.block(0, h, h, h), m.block(h, 0, h, h),
            m.block(h, h, h, h)};
}

template <typename T>
Matrix<T> join4(const Matrix<T>& a11, const Matrix<T>& a12, const Matrix<T>& a21,
                const Matrix<T>& a22) {
    if (a11.rows() != a12.rows() || a21.rows() != a22.rows() || a11.cols() != a21.cols() ||
        a12.cols() != a22.cols())
        throw ShapeMismatch("join4 block shapes do not align");
    Matrix<T> m(a11.rows() + a21.rows(), a11.cols() + a12.cols());
    std::size_t h = a11.rows(), w = a11.cols();
    for (std::size_t i = 0; i < a11.rows(); ++i)
        for (std::size_t j = 0; j < a11.cols(); ++j) m(i, j) = a11(i, j);
    for (std::size_t i = 0; i < a12.rows(); ++i)
        for (std::size_t j = 0; j < a12.cols(); ++j) m(i, w + j) = a12(i, j);
    for (std::size_t i = 0; i < a21.rows(); ++i)
        for (std::size_t j = 0; j < a21.cols(); ++j) m(h + i, j) = a21(i, j);
    for (std::size_t i = 0; i < a22.rows(); ++i)
        for (std::size_t j = 0; j < a22.cols(); ++j) m(h + i, w + j) = a22(i, j);
    return m;
}

template <typename T>
Matrix<T> join4(const BlockQuad<T>& q) {
    return join4(q.a11, q.a12, q.a21, q.a22);
}

// Entrywise exact division by a ring scalar; every entry must be divisible.
inline IntMatrix scalar_exact_div(const IntMatrix& m, const Int& s) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = exact_div(m(i, j), s);
    return r;
}

inline std::size_t next_pow2(std::size_t x) {
    std::size_t n = 1;
    while (n < x) n <<= 1;
    return n;
}

inline bool is_pow2(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

// Zero-pad to the smallest 2^k x 2^k square holding the matrix.
template <typename T>
Matrix<T> pad_pow2(const Matrix<T>& m) {
    std::size_t n = next_pow2(std::max({m.rows(), m.cols(), std::size_t{1}}));
    if (m.rows() == n && m.cols() == n) return m;
    Matrix<T> out(n, n);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

// Leading r x c corner; inverse of pad_pow2.
template <typename T>
Matrix<T> trim(const Matrix<T>& m, std::size_t r, std::size_t c) {
    if (r > m.rows() || c > m.cols())
        throw TrimOutOfRange("trim target exceeds matrix shape");
    return m.block(0, 0, r, c);
}

inline RatMatrix promote(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// Checked demotion to the ring; throws NotIntegral on any denominator != 1.
inline IntMatrix demote(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& v = m(i, j);
            if (!v.is_integer())
                throw NotIntegral("entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ") = " + v.str() +
                                  " is not in the ring");
            r(i, j) = v.num();
        }
    return r;
}

inline RatMatrix operator*(const IntMatrix& a, const RatMatrix& b) { return promote(a) * b; }
inline RatMatrix operator*(const RatMatrix& a, const IntMatrix& b) { return a * promote(b); }

}  // namespace ldu
