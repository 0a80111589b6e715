#include "a1deg/matrix.hpp"

#include "a1deg/errors.hpp"

#include <algorithm>

namespace a1deg {

matrix matrix::identity(const field_ptr& k, size_t n) {
    matrix m(k, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = k->one();
    return m;
}

matrix matrix::operator*(const matrix& other) const {
    if (cols_ != other.rows_) fail(errc::internal, "matrix dimension mismatch");
    matrix r(k_, rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t l = 0; l < cols_; ++l) {
            if (at(i, l).is_zero()) continue;
            for (size_t j = 0; j < other.cols_; ++j) {
                if (other.at(l, j).is_zero()) continue;
                r.at(i, j) += at(i, l) * other.at(l, j);
            }
        }
    return r;
}

matrix matrix::transpose() const {
    matrix r(k_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool matrix::operator==(const matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    if (!same_field(k_, other.k_)) return false;
    return e_ == other.e_;
}

bool matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

element matrix::det() const {
    if (rows_ != cols_) fail(errc::internal, "determinant of a non-square matrix");
    matrix m = *this;
    element d = k_->one();
    for (size_t col = 0; col < cols_; ++col) {
        size_t piv = col;
        while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) return k_->zero();
        if (piv != col) {
            m.swap_rows(piv, col);
            d = -d;
        }
        d *= m.at(col, col);
        element inv = m.at(col, col).inverse();
        for (size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            element f = m.at(r, col) * inv;
            for (size_t c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return d;
}

matrix matrix::inverse() const {
    if (rows_ != cols_) fail(errc::internal, "inverse of a non-square matrix");
    matrix m = *this;
    matrix inv = identity(k_, rows_);
    for (size_t col = 0; col < cols_; ++col) {
        size_t piv = col;
        while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) fail(errc::degenerate_form, "matrix is singular");
        if (piv != col) {
            m.swap_rows(piv, col);
            inv.swap_rows(piv, col);
        }
        element scale = m.at(col, col).inverse();
        for (size_t c = 0; c < cols_; ++c) {
            m.at(col, c) *= scale;
            inv.at(col, c) *= scale;
        }
        for (size_t r = 0; r < rows_; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            element f = m.at(r, col);
            for (size_t c = 0; c < cols_; ++c) {
                m.at(r, c) -= f * m.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

void matrix::swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void matrix::swap_cols(size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

matrix matrix::block(size_t i0, size_t j0, size_t h, size_t w) const {
    matrix r(k_, h, w);
    for (size_t i = 0; i < h; ++i)
        for (size_t j = 0; j < w; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

} // namespace a1deg
