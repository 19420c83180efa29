#include <doctest.h>

#include <random>

#include "eaq/field.hpp"
#include "eaq/matrix.hpp"

using namespace eaq;

namespace {

MatrixGF random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    MatrixGF m(f, r, c);
    std::uniform_int_distribution<std::uint64_t> dist(0, f->order() - 1);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m.set(i, j, f->element_at(dist(rng)));
        }
    }
    return m;
}

// Oracle: independent triple-loop product using only FieldElement arithmetic.
MatrixGF schoolbook_product(const MatrixGF& a, const MatrixGF& b) {
    MatrixGF out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            FieldElement acc = a.field()->zero();
            for (std::size_t k = 0; k < a.cols(); ++k) {
                acc = add(acc, mul(a.at(i, k), b.at(k, j)));
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("mat_mul") {
    auto f5 = make_field(5, 1);
    MatrixGF m(f5, 1, 1);
    m.set(0, 0, f5->from_int(2));
    MatrixGF n(f5, 1, 1);
    n.set(0, 0, f5->from_int(3));
    CHECK(mat_mul(m, n).at(0, 0).is_one());  // 6 = 1

    auto f7 = make_field(7, 1);
    std::mt19937_64 rng(7);
    MatrixGF a = random_matrix(f7, 3, 3, rng);
    CHECK(mat_mul(a, MatrixGF::identity(f7, 3)) == a);
    MatrixGF b = random_matrix(f7, 3, 3, rng);
    CHECK(mat_mul(a, b) == schoolbook_product(a, b));

    CHECK_THROWS_AS(mat_mul(a, random_matrix(f7, 4, 2, rng)), ShapeMismatch);
    CHECK_THROWS_AS(mat_mul(a, random_matrix(f5, 3, 3, rng)), FieldMismatch);
}

TEST_CASE("rref") {
    auto f7 = make_field(7, 1);
    MatrixGF z(f7, 3, 4);
    auto rz = rref(z);
    CHECK(rz.rank == 0);
    CHECK(rz.reduced == z);

    MatrixGF id = MatrixGF::identity(f7, 4);
    auto ri = rref(id);
    CHECK(ri.rank == 4);
    CHECK(ri.reduced == id);

    // Vandermonde rows (1, a, a^2) for distinct a; determinant oracle
    // prod (a_i - a_j) != 0 certifies rank 3.
    std::vector<std::uint64_t> pts{1, 3, 5};
    MatrixGF v(f7, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        FieldElement a = f7->from_int(pts[i]);
        v.set(i, 0, f7->one());
        v.set(i, 1, a);
        v.set(i, 2, mul(a, a));
    }
    FieldElement oracle = f7->one();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            oracle = mul(oracle, sub(f7->from_int(pts[i]), f7->from_int(pts[j])));
        }
    }
    REQUIRE(!oracle.is_zero());
    CHECK(rref(v).rank == 3);
    CHECK(!det(v).is_zero());
}

TEST_CASE("rank") {
    auto f25 = make_field(5, 2);
    CHECK(rank(MatrixGF(f25, 3, 5)) == 0);
    CHECK(rank(MatrixGF::identity(f25, 6)) == 6);

    // rank-1 outer product u v^T with u, v nonzero
    std::mt19937_64 rng(25);
    MatrixGF u = random_matrix(f25, 4, 1, rng);
    u.set(0, 0, f25->one());
    MatrixGF v = random_matrix(f25, 1, 5, rng);
    v.set(0, 0, primitive_element(f25));
    CHECK(rank(mat_mul(u, v)) == 1);
}

TEST_CASE("right_kernel") {
    auto f5 = make_field(5, 1);
    CHECK(right_kernel(MatrixGF::identity(f5, 4)).rows() == 0);

    MatrixGF z(f5, 1, 4);
    MatrixGF kz = right_kernel(z);
    CHECK(kz.rows() == 4);
    CHECK(rank(kz) == 4);

    MatrixGF ones(f5, 1, 3);
    for (int j = 0; j < 3; ++j) ones.set(0, j, f5->one());
    MatrixGF k = right_kernel(ones);
    CHECK(k.rows() == 2);
    for (std::size_t r = 0; r < k.rows(); ++r) {
        FieldElement s = f5->zero();
        for (std::size_t j = 0; j < 3; ++j) s = add(s, k.at(r, j));
        CHECK(s.is_zero());
    }
    // enumeration oracle: count vectors with coordinate sum zero
    int in_kernel = 0;
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            for (int c = 0; c < 5; ++c) {
                if ((a + b + c) % 5 == 0) ++in_kernel;
            }
        }
    }
    CHECK(in_kernel == 25);  // dimension 2 over GF(5)
}

TEST_CASE("galois conjugate transpose") {
    auto f5 = make_field(5, 1);
    std::mt19937_64 rng(11);
    MatrixGF a = random_matrix(f5, 2, 3, rng);
    CHECK(galois_conj_transpose(a, 0) == transpose(a));  // prime field: plain transpose

    auto f9 = make_field(3, 2);
    CHECK(galois_conj_transpose(MatrixGF::identity(f9, 3), 1) == MatrixGF::identity(f9, 3));

    MatrixGF m(f9, 1, 1);
    FieldElement gen = f9->element_at(3);  // a with a^2 = -1
    m.set(0, 0, gen);
    CHECK(galois_conj_transpose(m, 1).at(0, 0) == frobenius(gen, 1));
    CHECK(galois_conj_transpose(m, 1).at(0, 0) == f9->from_coeffs({0, 2}));

    CHECK_THROWS_AS(galois_conj_transpose(m, 2), ParameterOutOfRange);
}

TEST_CASE("determinant") {
    auto f5 = make_field(5, 1);
    CHECK(det(MatrixGF::identity(f5, 3)).is_one());

    MatrixGF rep(f5, 2, 2);
    rep.set(0, 0, f5->from_int(1));
    rep.set(0, 1, f5->from_int(2));
    rep.set(1, 0, f5->from_int(1));
    rep.set(1, 1, f5->from_int(2));
    CHECK(det(rep).is_zero());

    MatrixGF m(f5, 2, 2);
    m.set(0, 0, f5->from_int(1));
    m.set(0, 1, f5->from_int(2));
    m.set(1, 0, f5->from_int(3));
    m.set(1, 1, f5->from_int(4));
    CHECK(det(m) == f5->from_int(3));  // 4 - 6 = -2 = 3

    CHECK_THROWS_AS(det(MatrixGF(f5, 2, 3)), NotSquare);
}

TEST_CASE("matrix invariants on random samples") {
    std::mt19937_64 rng(20260809);
    std::vector<FieldPtr> fields{make_field(2, 2), make_field(5, 1), make_field(3, 2),
                                 make_field(5, 2)};
    std::uniform_int_distribution<std::size_t> rdist(1, 6), cdist(1, 6);
    for (int iter = 0; iter < 500; ++iter) {
        const auto& f = fields[iter % fields.size()];
        MatrixGF a = random_matrix(f, rdist(rng), cdist(rng), rng);
        const std::size_t rk = rank(a);
        CHECK(rk == rank(transpose(a)));
        CHECK(right_kernel(a).rows() + rk == a.cols());

        const unsigned e = f->degree();
        for (unsigned k = 0; k < e; ++k) {
            CHECK(galois_conj_transpose(galois_conj_transpose(a, k), (e - k) % e) == a);
        }
        if (a.rows() == a.cols()) {
            CHECK((rk == a.rows()) == !det(a).is_zero());
        }
    }
}
