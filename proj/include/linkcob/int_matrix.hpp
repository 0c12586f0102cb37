#pragma once

#include "linkcob/ints.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace linkcob {

// Dense rectangular matrix over Z with arbitrary-precision entries, row-major.
// Zero-by-anything shapes are legal and show up constantly (the empty form is
// a first-class citizen here), so every routine must tolerate them.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);
    static IntMatrix row_vector(const std::vector<Int>& v);
    static IntMatrix column_vector(const std::vector<Int>& v);
    // Block diagonal [a 0; 0 b].
    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
    // Stack b below a (column counts must match).
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> col(std::size_t j) const;
    void set_row(std::size_t i, const std::vector<Int>& v);

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x

    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    bool is_identity() const;

    // Elementary row operations (used by the normal-form algorithms).
    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);  // row dst += c * row src
    void swap_cols(std::size_t i, std::size_t j);
    void negate_col(std::size_t i);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);

    IntMatrix submatrix_rows(const std::vector<std::size_t>& idx) const;
    IntMatrix slice_cols(std::size_t first, std::size_t count) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

// Exact determinant by fraction-free (Bareiss) elimination; square input.
Int determinant(const IntMatrix& a);

}  // namespace linkcob
