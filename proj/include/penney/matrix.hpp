#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "penney/rational.hpp"

namespace penney {

/// Fixed-length row vector of exact rationals.
class RVector {
public:
    RVector() = default;
    explicit RVector(std::size_t size) : entries_(size) {}
    explicit RVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    RVector(std::initializer_list<Rational> entries) : entries_(entries) {}

    std::size_t size() const noexcept { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Rational> entries() const noexcept { return entries_; }

    Rational sum() const;

    friend bool operator==(const RVector&, const RVector&) = default;

private:
    std::vector<Rational> entries_;
};

/// Dense row-major matrix of exact rationals. Dimensions are fixed at construction.
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols);
    RMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RMatrix identity(std::size_t n);
    static RMatrix diagonal(std::span<const Rational> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Rational> row(std::size_t r) const {
        return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
    }
    std::span<const Rational> entries() const noexcept { return entries_; }

    friend bool operator==(const RMatrix&, const RMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RMatrix mat_mul(const RMatrix& a, const RMatrix& b);
RMatrix mat_add(const RMatrix& a, const RMatrix& b);
RMatrix mat_sub(const RMatrix& a, const RMatrix& b);

/// a^n by repeated squaring; a must be square.
RMatrix mat_pow(const RMatrix& a, std::size_t n);

/// Exact inverse by Gauss-Jordan elimination, pivoting on the first nonzero in each column.
/// Throws SingularMatrixError naming the column that has no pivot.
RMatrix mat_inverse(const RMatrix& a);

/// Row vector times matrix: x·A.
RVector vec_mat_mul(const RVector& x, const RMatrix& a);

/// Matrix times column vector: A·x.
RVector mat_vec_mul(const RMatrix& a, const RVector& x);

inline RMatrix operator*(const RMatrix& a, const RMatrix& b) { return mat_mul(a, b); }
inline RMatrix operator+(const RMatrix& a, const RMatrix& b) { return mat_add(a, b); }
inline RMatrix operator-(const RMatrix& a, const RMatrix& b) { return mat_sub(a, b); }

/// True when every entry is nonnegative and every row sums to exactly one.
bool is_row_stochastic(const RMatrix& a);

}  // namespace penney
