#include "eaq/matrix.hpp"

#include <algorithm>
#include <array>

namespace eaq {
namespace {

void require_same_field(const MatrixGF& a, const MatrixGF& b) {
    if (!a.field()->same_as(*b.field())) {
        throw FieldMismatch("matrices over different fields");
    }
}

constexpr unsigned kMaxDegree = 63;

}  // namespace

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      ew_(field_->degree()),
      data_(rows * cols * ew_, 0) {}

MatrixGF MatrixGF::identity(const FieldPtr& field, std::size_t n) {
    MatrixGF m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) field->fe_set_one(m.raw(i, i));
    return m;
}

FieldElement MatrixGF::at(std::size_t i, std::size_t j) const {
    const std::uint64_t* p = raw(i, j);
    return FieldElement(field_, std::vector<std::uint64_t>(p, p + ew_));
}

void MatrixGF::set(std::size_t i, std::size_t j, const FieldElement& v) {
    if (!v.field()->same_as(*field_)) throw FieldMismatch("entry from a different field");
    std::copy(v.coeffs().begin(), v.coeffs().end(), raw(i, j));
}

bool MatrixGF::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!field_->fe_is_zero(raw(i, j))) return false;
    }
    return true;
}

MatrixGF MatrixGF::submatrix_columns(const std::vector<std::size_t>& cols) const {
    MatrixGF out(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::copy(raw(i, cols[j]), raw(i, cols[j]) + ew_, out.raw(i, j));
        }
    }
    return out;
}

MatrixGF MatrixGF::augment(const MatrixGF& right) const {
    require_same_field(*this, right);
    if (right.rows() != rows_) throw ShapeMismatch("augment: row counts differ");
    MatrixGF out(field_, rows_, cols_ + right.cols());
    for (std::size_t i = 0; i < rows_; ++i) {
        std::copy(raw(i, 0), raw(i, 0) + cols_ * ew_, out.raw(i, 0));
        std::copy(right.raw(i, 0), right.raw(i, 0) + right.cols() * ew_, out.raw(i, cols_));
    }
    return out;
}

bool operator==(const MatrixGF& a, const MatrixGF& b) {
    return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
}

MatrixGF mat_mul(const MatrixGF& a, const MatrixGF& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw ShapeMismatch("mat_mul: inner dimensions differ");
    const auto& f = *a.field();
    MatrixGF out(a.field(), a.rows(), b.cols());
    std::array<std::uint64_t, kMaxDegree> t{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t* aik = a.raw(i, k);
            if (f.fe_is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                f.fe_mul(aik, b.raw(k, j), t.data());
                f.fe_add(out.raw(i, j), t.data(), out.raw(i, j));
            }
        }
    }
    return out;
}

MatrixGF transpose(const MatrixGF& a) {
    MatrixGF out(a.field(), a.cols(), a.rows());
    const unsigned ew = a.field()->degree();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::copy(a.raw(i, j), a.raw(i, j) + ew, out.raw(j, i));
        }
    }
    return out;
}

MatrixGF vstack(const MatrixGF& top, const MatrixGF& bottom) {
    require_same_field(top, bottom);
    if (top.cols() != bottom.cols()) throw ShapeMismatch("vstack: column counts differ");
    MatrixGF out(top.field(), top.rows() + bottom.rows(), top.cols());
    const unsigned ew = top.field()->degree();
    for (std::size_t i = 0; i < top.rows(); ++i) {
        std::copy(top.raw(i, 0), top.raw(i, 0) + top.cols() * ew, out.raw(i, 0));
    }
    for (std::size_t i = 0; i < bottom.rows(); ++i) {
        std::copy(bottom.raw(i, 0), bottom.raw(i, 0) + top.cols() * ew, out.raw(top.rows() + i, 0));
    }
    return out;
}

namespace {

// rows[r] -= factor * rows[src], starting at column `from` (everything to the
// left is already zero in the source row).
void row_axpy(MatrixGF& m, std::size_t r, std::size_t src, const std::uint64_t* factor,
              std::size_t from) {
    const auto& f = *m.field();
    std::array<std::uint64_t, kMaxDegree> t{};
    for (std::size_t j = from; j < m.cols(); ++j) {
        const std::uint64_t* s = m.raw(src, j);
        if (f.fe_is_zero(s)) continue;
        f.fe_mul(factor, s, t.data());
        f.fe_sub(m.raw(r, j), t.data(), m.raw(r, j));
    }
}

void row_scale(MatrixGF& m, std::size_t r, const std::uint64_t* factor, std::size_t from) {
    const auto& f = *m.field();
    std::array<std::uint64_t, kMaxDegree> t{};
    for (std::size_t j = from; j < m.cols(); ++j) {
        std::uint64_t* cell = m.raw(r, j);
        if (f.fe_is_zero(cell)) continue;
        f.fe_mul(cell, factor, t.data());
        std::copy(t.begin(), t.begin() + f.degree(), cell);
    }
}

void row_swap(MatrixGF& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    const unsigned ew = m.field()->degree();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap_ranges(m.raw(a, j), m.raw(a, j) + ew, m.raw(b, j));
    }
}

}  // namespace

RrefResult rref(const MatrixGF& a) {
    RrefResult res{a, {}, 0};
    MatrixGF& m = res.reduced;
    const auto& f = *a.field();
    std::array<std::uint64_t, kMaxDegree> piv_inv{}, factor{};
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t r = row;
        while (r < m.rows() && f.fe_is_zero(m.raw(r, col))) ++r;
        if (r == m.rows()) continue;
        row_swap(m, r, row);
        f.fe_inv(m.raw(row, col), piv_inv.data());
        row_scale(m, row, piv_inv.data(), col);
        for (std::size_t rr = 0; rr < m.rows(); ++rr) {
            if (rr == row || f.fe_is_zero(m.raw(rr, col))) continue;
            std::copy(m.raw(rr, col), m.raw(rr, col) + f.degree(), factor.data());
            row_axpy(m, rr, row, factor.data(), col);
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

std::size_t rank(const MatrixGF& a) { return rref(a).rank; }

MatrixGF right_kernel(const MatrixGF& a) {
    RrefResult r = rref(a);
    const auto& f = *a.field();
    std::vector<std::size_t> free_cols;
    free_cols.reserve(a.cols() - r.rank);
    std::size_t next_piv = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (next_piv < r.pivots.size() && r.pivots[next_piv] == c) {
            ++next_piv;
        } else {
            free_cols.push_back(c);
        }
    }
    MatrixGF k(a.field(), free_cols.size(), a.cols());
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        const std::size_t fc = free_cols[idx];
        f.fe_set_one(k.raw(idx, fc));
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            f.fe_neg(r.reduced.raw(i, fc), k.raw(idx, r.pivots[i]));
        }
    }
    return k;
}

MatrixGF entrywise_frobenius(const MatrixGF& a, unsigned j) {
    const auto& f = *a.field();
    MatrixGF out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            f.fe_frobenius(a.raw(i, c), j, out.raw(i, c));
        }
    }
    return out;
}

MatrixGF galois_conj_transpose(const MatrixGF& a, unsigned k) {
    const auto& f = *a.field();
    if (k >= f.degree()) throw ParameterOutOfRange("galois parameter k must satisfy 0 <= k < e");
    const unsigned j = (f.degree() - k) % f.degree();
    MatrixGF out(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            f.fe_frobenius(a.raw(i, c), j, out.raw(c, i));
        }
    }
    return out;
}

FieldElement det(const MatrixGF& a) {
    if (a.rows() != a.cols()) throw NotSquare("determinant of a non-square matrix");
    const auto& f = *a.field();
    MatrixGF m = a;
    std::array<std::uint64_t, kMaxDegree> piv_inv{}, factor{}, acc{};
    bool negate = false;
    f.fe_set_one(acc.data());
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t r = col;
        while (r < m.rows() && f.fe_is_zero(m.raw(r, col))) ++r;
        if (r == m.rows()) return a.field()->zero();
        if (r != col) {
            row_swap(m, r, col);
            negate = !negate;
        }
        f.fe_mul(acc.data(), m.raw(col, col), acc.data());
        f.fe_inv(m.raw(col, col), piv_inv.data());
        for (std::size_t rr = col + 1; rr < m.rows(); ++rr) {
            if (f.fe_is_zero(m.raw(rr, col))) continue;
            f.fe_mul(m.raw(rr, col), piv_inv.data(), factor.data());
            row_axpy(m, rr, col, factor.data(), col);
        }
    }
    if (negate) f.fe_neg(acc.data(), acc.data());
    return FieldElement(a.field(), std::vector<std::uint64_t>(acc.begin(), acc.begin() + f.degree()));
}

}  // namespace eaq
