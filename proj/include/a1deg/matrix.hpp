#ifndef A1DEG_MATRIX_HPP
#define A1DEG_MATRIX_HPP

#include "a1deg/fields.hpp"

#include <cstddef>
#include <vector>

namespace a1deg {

// Small dense matrix of field elements, row major.
class matrix {
public:
    matrix() = default;
    matrix(field_ptr k, size_t rows, size_t cols)
        : k_(std::move(k)), rows_(rows), cols_(cols), e_(rows * cols, k_->zero()) {}

    static matrix identity(const field_ptr& k, size_t n);

    const field_ptr& domain() const { return k_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    element& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const element& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    matrix operator*(const matrix& other) const;
    matrix transpose() const;
    bool operator==(const matrix& other) const;
    bool operator!=(const matrix& other) const { return !(*this == other); }

    bool is_symmetric() const;
    element det() const;
    matrix inverse() const;

    void swap_rows(size_t a, size_t b);
    void swap_cols(size_t a, size_t b);

    matrix block(size_t i0, size_t j0, size_t h, size_t w) const;

private:
    field_ptr k_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<element> e_;
};

} // namespace a1deg

#endif
