#include <doctest.h>

#include <random>

#include "eaq/lincode.hpp"
#include "test_util.hpp"

using namespace eaq;
using namespace eaq::testutil;

namespace {

MatrixGF grs_matrix(const FieldPtr& f, const std::vector<std::uint64_t>& pts, std::size_t l) {
    MatrixGF g(f, l, pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
        FieldElement a = f->from_int(pts[j]);
        FieldElement p = f->one();
        for (std::size_t i = 0; i < l; ++i) {
            g.set(i, j, p);
            p = mul(p, a);
        }
    }
    return g;
}

}  // namespace

TEST_CASE("from_generator canonicalizes") {
    auto f5 = make_field(5, 1);
    LinearCode full = LinearCode::from_generator(MatrixGF::identity(f5, 4));
    CHECK(full.dim() == 4);
    CHECK(full.length() == 4);
    CHECK(full.parity_check().rows() == 0);

    MatrixGF ones(f5, 1, 6);
    for (int j = 0; j < 6; ++j) ones.set(0, j, f5->one());
    LinearCode rep = LinearCode::from_generator(ones);
    CHECK(rep.dim() == 1);

    MatrixGF prop(f5, 2, 4);
    for (int j = 0; j < 4; ++j) {
        prop.set(0, j, f5->from_int(j + 1));
        prop.set(1, j, f5->from_int((2 * (j + 1)) % 5));
    }
    CHECK(LinearCode::from_generator(prop).dim() == 1);

    CHECK_THROWS_AS(LinearCode::from_generator(MatrixGF(f5, 1, 0)), EmptyMatrix);
}

TEST_CASE("galois_power_code preserves parameters and weights") {
    auto f9 = make_field(3, 2);
    MatrixGF g = grs_matrix(f9, {1, 2, 3, 4}, 2);
    LinearCode c = LinearCode::from_generator(g);
    CHECK(galois_power_code(c, 0) == c);

    auto f5 = make_field(5, 1);
    LinearCode cp = LinearCode::from_generator(grs_matrix(f5, {1, 2, 3}, 2));
    CHECK(galois_power_code(cp, 3) == cp);  // Frobenius is trivial on a prime field

    LinearCode powered = galois_power_code(c, 1);
    CHECK(powered.dim() == c.dim());
    CHECK(weight_distribution(powered) == weight_distribution(c));
}

TEST_CASE("galois_dual") {
    auto f5 = make_field(5, 1);
    LinearCode full = LinearCode::from_generator(MatrixGF::identity(f5, 3));
    CHECK(galois_dual(full, 0).dim() == 0);

    MatrixGF ones(f5, 1, 4);
    for (int j = 0; j < 4; ++j) ones.set(0, j, f5->one());
    LinearCode dual = galois_dual(LinearCode::from_generator(ones), 0);
    CHECK(dual.dim() == 3);
    for (const auto& w : enumerate_codewords(dual)) {
        FieldElement s = f5->zero();
        for (const auto& x : w) s = add(s, x);
        CHECK(s.is_zero());
    }

    auto f9 = make_field(3, 2);
    MatrixGF g(f9, 1, 2);
    g.set(0, 0, f9->one());
    g.set(0, 1, f9->element_at(3));
    LinearCode c = LinearCode::from_generator(g);
    LinearCode d1 = galois_dual(c, 1);
    CHECK(d1.dim() == 1);
    // the 1-Galois pairing vanishes on every pair of codewords
    for (const auto& cw : enumerate_codewords(c)) {
        for (const auto& dw : enumerate_codewords(d1)) {
            FieldElement s = f9->zero();
            for (std::size_t i = 0; i < 2; ++i) {
                s = add(s, mul(cw[i], frobenius(dw[i], 1)));
            }
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("hull dimension") {
    auto f5 = make_field(5, 1);
    LinearCode full = LinearCode::from_generator(MatrixGF::identity(f5, 3));
    CHECK(hull_dimension(full, 0) == 0);

    MatrixGF so(f5, 1, 2);
    so.set(0, 0, f5->from_int(1));
    so.set(0, 1, f5->from_int(2));  // 1 + 4 = 0: self-orthogonal
    CHECK(hull_dimension(LinearCode::from_generator(so), 0) == 1);

    auto f4 = make_field(2, 2);
    std::mt19937_64 rng(44);
    for (int iter = 0; iter < 25; ++iter) {
        LinearCode c = random_code(f4, 3, 6, rng);
        if (c.dim() == 0) continue;
        LinearCode d = galois_dual(c, 1);
        CHECK(hull_dimension(c, 1) == intersection_dimension_by_enumeration(c, d));
    }
}

TEST_CASE("is_k_galois_lcd") {
    auto f9 = make_field(3, 2);
    LinearCode full = LinearCode::from_generator(MatrixGF::identity(f9, 4));
    for (unsigned k = 0; k < 2; ++k) {
        CHECK(is_k_galois_lcd(full, k, LcdMethod::both));
    }

    auto f5 = make_field(5, 1);
    MatrixGF so(f5, 1, 2);
    so.set(0, 0, f5->from_int(1));
    so.set(0, 1, f5->from_int(2));
    CHECK(!is_k_galois_lcd(LinearCode::from_generator(so), 0, LcdMethod::both));
}

TEST_CASE("min_distance exhaustive") {
    auto f5 = make_field(5, 1);
    MatrixGF ones(f5, 1, 6);
    for (int j = 0; j < 6; ++j) ones.set(0, j, f5->one());
    LinearCode rep = LinearCode::from_generator(ones);
    DistanceCertificate rc = min_distance(rep);
    CHECK(rc.method == DistanceCertificate::Method::exhaustive);
    CHECK(rc.d_lower == 6);
    CHECK(rc.d_upper == 6);
    REQUIRE(rc.witness.has_value());
    CHECK(hamming_weight(*rc.witness) == 6);
    CHECK(rep.contains(*rc.witness));

    LinearCode full = LinearCode::from_generator(MatrixGF::identity(f5, 4));
    CHECK(min_distance(full).d_upper == 1);

    LinearCode grs = LinearCode::from_generator(grs_matrix(f5, {1, 2, 3, 4}, 2));
    DistanceCertificate gc = min_distance(grs);
    CHECK(gc.d_upper == 3);
    CHECK(is_mds(grs, gc));

    CHECK_THROWS_AS(min_distance(LinearCode::from_generator(MatrixGF(f5, 1, 3))), EmptyCode);
}

TEST_CASE("min_distance over budget falls back to bounds") {
    auto f25 = make_field(5, 2);
    std::mt19937_64 rng(99);
    LinearCode c = random_code(f25, 5, 8, rng);
    DistanceCertificate cert = min_distance(c, 100);  // 25^5 way over
    CHECK(cert.method == DistanceCertificate::Method::bounds_only);
    CHECK(cert.d_lower == 1);
    CHECK(cert.d_upper <= 8);
    CHECK(!cert.exact());
    CHECK_THROWS_AS(is_mds(c, cert), InexactDistance);
}

TEST_CASE("exhaustive distance matches the column-dependence oracle") {
    std::mt19937_64 rng(515);
    std::vector<FieldPtr> fields{make_field(2, 2), make_field(5, 1), make_field(7, 1),
                                 make_field(3, 2)};
    int checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        const auto& f = fields[iter % fields.size()];
        std::uniform_int_distribution<std::size_t> ndist(2, 8), ldist(1, 4);
        const std::size_t n = ndist(rng);
        LinearCode c = random_code(f, std::min(ldist(rng), n), n, rng);
        if (c.dim() == 0) continue;
        DistanceCertificate cert = min_distance(c);
        REQUIRE(cert.method == DistanceCertificate::Method::exhaustive);
        CHECK(cert.d_upper == distance_by_column_dependence(c));
        CHECK(c.contains(*cert.witness));
        CHECK(hamming_weight(*cert.witness) == cert.d_upper);
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("is_mds basics") {
    auto f5 = make_field(5, 1);
    MatrixGF ones(f5, 1, 5);
    for (int j = 0; j < 5; ++j) ones.set(0, j, f5->one());
    LinearCode rep = LinearCode::from_generator(ones);
    CHECK(is_mds(rep, min_distance(rep)));

    LinearCode full = LinearCode::from_generator(MatrixGF::identity(f5, 3));
    CHECK(is_mds(full, min_distance(full)));
}

TEST_CASE("mds witness extraction and duality certificate") {
    auto f5 = make_field(5, 1);
    LinearCode grs = LinearCode::from_generator(grs_matrix(f5, {1, 2, 3, 4}, 2));
    DistanceCertificate cert = min_distance(grs);
    REQUIRE(is_mds(grs, cert));

    std::vector<FieldElement> w = mds_min_weight_witness(grs);
    CHECK(hamming_weight(w) == 3);
    CHECK(grs.contains(w));

    LinearCode dual = galois_dual(grs, 0);
    DistanceCertificate dc = mds_dual_certificate(dual, cert, grs.dim());
    CHECK(dc.d_upper == 3);  // [4,2,3] is self-dual-shaped: dual is [4,2,3]
    CHECK(dc.exact());
    CHECK(is_mds(dual, dc));
    CHECK(dual.contains(*dc.witness));
    // cross-check against exhaustive enumeration
    CHECK(min_distance(dual).d_upper == dc.d_upper);
}
