#include "penney/matrix.hpp"

#include <string>
#include <utility>

namespace penney {

namespace {

std::string dims(const RMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Rational RVector::sum() const {
    Rational total;
    for (const auto& x : entries_) total += x;
    return total;
}

RMatrix::RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RMatrix::RMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatchError("matrix: " + std::to_string(entries_.size()) + " entries given for " +
                                     std::to_string(rows_) + "x" + std::to_string(cols_));
}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatchError("matrix: ragged initializer rows");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

RMatrix RMatrix::identity(std::size_t n) {
    std::vector<Rational> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return RMatrix(n, n, std::move(e));
}

RMatrix RMatrix::diagonal(std::span<const Rational> diag) {
    const std::size_t n = diag.size();
    std::vector<Rational> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
    return RMatrix(n, n, std::move(e));
}

RMatrix mat_mul(const RMatrix& a, const RMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatchError("mat_mul: " + dims(a) + " times " + dims(b));
    std::vector<Rational> out(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero()) out[i * b.cols() + j] += aik * b(k, j);
            }
        }
    }
    return RMatrix(a.rows(), b.cols(), std::move(out));
}

RMatrix mat_add(const RMatrix& a, const RMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("mat_add: " + dims(a) + " plus " + dims(b));
    std::vector<Rational> out(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries()[i];
    return RMatrix(a.rows(), a.cols(), std::move(out));
}

RMatrix mat_sub(const RMatrix& a, const RMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("mat_sub: " + dims(a) + " minus " + dims(b));
    std::vector<Rational> out(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.entries()[i];
    return RMatrix(a.rows(), a.cols(), std::move(out));
}

RMatrix mat_pow(const RMatrix& a, std::size_t n) {
    if (!a.is_square()) throw DimensionMismatchError("mat_pow: non-square " + dims(a));
    RMatrix result = RMatrix::identity(a.rows());
    RMatrix base = a;
    while (n > 0) {
        if (n & 1U) result = mat_mul(result, base);
        n >>= 1U;
        if (n > 0) base = mat_mul(base, base);
    }
    return result;
}

RMatrix mat_inverse(const RMatrix& a) {
    if (!a.is_square()) throw DimensionMismatchError("mat_inverse: non-square " + dims(a));
    const std::size_t n = a.rows();
    const std::size_t w = 2 * n;

    // Augmented [A | I], eliminated in place.
    std::vector<Rational> m(n * w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i * w + j] = a(i, j);
        m[i * w + n + i] = 1;
    }
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return m[r * w + c]; };

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrixError(col);
        if (pivot != col) {
            for (std::size_t c = 0; c < w; ++c) std::swap(at(pivot, c), at(col, c));
        }

        const Rational inv = Rational(1) / at(col, col);
        for (std::size_t c = col; c < w; ++c) {
            if (!at(col, c).is_zero()) at(col, c) *= inv;
        }

        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || at(r, col).is_zero()) continue;
            const Rational factor = at(r, col);
            for (std::size_t c = col; c < w; ++c) {
                if (!at(col, c).is_zero()) at(r, c) -= factor * at(col, c);
            }
        }
    }

    std::vector<Rational> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.push_back(std::move(at(i, n + j)));
    }
    return RMatrix(n, n, std::move(out));
}

RVector vec_mat_mul(const RVector& x, const RMatrix& a) {
    if (x.size() != a.rows())
        throw DimensionMismatchError("vec_mat_mul: length " + std::to_string(x.size()) + " times " + dims(a));
    std::vector<Rational> out(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a(i, j).is_zero()) out[j] += x[i] * a(i, j);
        }
    }
    return RVector(std::move(out));
}

RVector mat_vec_mul(const RMatrix& a, const RVector& x) {
    if (x.size() != a.cols())
        throw DimensionMismatchError("mat_vec_mul: " + dims(a) + " times length " + std::to_string(x.size()));
    std::vector<Rational> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a(i, j).is_zero() && !x[j].is_zero()) out[i] += a(i, j) * x[j];
        }
    }
    return RVector(std::move(out));
}

bool is_row_stochastic(const RMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational total;
        for (const auto& x : a.row(i)) {
            if (x.sign() < 0) return false;
            total += x;
        }
        if (total != Rational(1)) return false;
    }
    return true;
}

}  // namespace penney
