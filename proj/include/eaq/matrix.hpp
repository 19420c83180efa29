#pragma once

#include <cstddef>
#include <vector>

#include "eaq/field.hpp"

namespace eaq {

/*
 * Dense matrix over a single FieldSpec. Entries live in one flat row-major
 * buffer of raw coefficient blocks (degree() words per entry), which keeps
 * elimination loops allocation-free. Matrices are values: every operation
 * returns a fresh matrix.
 */
class MatrixGF {
public:
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols);  // zero-filled

    static MatrixGF identity(const FieldPtr& field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    FieldElement at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const FieldElement& v);

    const std::uint64_t* raw(std::size_t i, std::size_t j) const {
        return data_.data() + (i * cols_ + j) * ew_;
    }
    std::uint64_t* raw(std::size_t i, std::size_t j) {
        return data_.data() + (i * cols_ + j) * ew_;
    }

    bool row_is_zero(std::size_t i) const;

    MatrixGF submatrix_columns(const std::vector<std::size_t>& cols) const;
    /// Append extra columns on the right.
    MatrixGF augment(const MatrixGF& right) const;

    friend bool operator==(const MatrixGF& a, const MatrixGF& b);

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    unsigned ew_ = 0;  // words per entry = field degree
    std::vector<std::uint64_t> data_;
};

MatrixGF mat_mul(const MatrixGF& a, const MatrixGF& b);
MatrixGF transpose(const MatrixGF& a);
MatrixGF vstack(const MatrixGF& top, const MatrixGF& bottom);

struct RrefResult {
    MatrixGF reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form with first-nonzero pivot selection.
RrefResult rref(const MatrixGF& a);

std::size_t rank(const MatrixGF& a);

/*
 * Basis of { x : A x^T = 0 } as matrix rows: one row per free column of the
 * RREF, in ascending free-column order, with a unit coordinate at the free
 * column. Reproducible byte-for-byte.
 */
MatrixGF right_kernel(const MatrixGF& a);

/// Entrywise x -> x^(p^j).
MatrixGF entrywise_frobenius(const MatrixGF& a, unsigned j);

/// A‡ at parameter k: transpose of the entrywise p^(e-k) power.
MatrixGF galois_conj_transpose(const MatrixGF& a, unsigned k);

FieldElement det(const MatrixGF& a);

}  // namespace eaq
