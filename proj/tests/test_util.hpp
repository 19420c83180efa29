#pragma once

// Shared brute-force oracles for the test suites. Everything here enumerates
// or recomputes from first principles, independent of the library paths under
// test, and is only suitable for tiny parameters.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "eaq/lincode.hpp"

namespace eaq::testutil {

inline MatrixGF random_matrix(const FieldPtr& f, std::size_t r, std::size_t c,
                              std::mt19937_64& rng) {
    MatrixGF m(f, r, c);
    std::uniform_int_distribution<std::uint64_t> dist(0, f->order() - 1);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m.set(i, j, f->element_at(dist(rng)));
        }
    }
    return m;
}

inline LinearCode random_code(const FieldPtr& f, std::size_t rows, std::size_t n,
                              std::mt19937_64& rng) {
    return LinearCode::from_generator(random_matrix(f, rows, n, rng));
}

/// All q^dim codewords, message indices counted in base q.
inline std::vector<std::vector<FieldElement>> enumerate_codewords(const LinearCode& c) {
    const auto& f = c.field();
    const std::size_t l = c.dim();
    const std::size_t n = c.length();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < l; ++i) total *= f->order();
    std::vector<std::vector<FieldElement>> words;
    words.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        std::vector<FieldElement> word(n, f->zero());
        for (std::size_t i = 0; i < l; ++i) {
            const FieldElement mi = f->element_at(t % f->order());
            t /= f->order();
            if (mi.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                word[j] = add(word[j], mul(mi, c.generator().at(i, j)));
            }
        }
        words.push_back(std::move(word));
    }
    return words;
}

inline std::map<std::size_t, std::size_t> weight_distribution(const LinearCode& c) {
    std::map<std::size_t, std::size_t> dist;
    for (const auto& w : enumerate_codewords(c)) ++dist[hamming_weight(w)];
    return dist;
}

/// Minimum distance as the least number of linearly dependent parity-check
/// columns; independent of the projective enumeration in min_distance.
inline std::size_t distance_by_column_dependence(const LinearCode& c) {
    const MatrixGF& h = c.parity_check();
    const std::size_t n = c.length();
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<std::size_t> pick(w);
        // first combination 0,1,..,w-1
        for (std::size_t i = 0; i < w; ++i) pick[i] = i;
        while (true) {
            if (rank(h.submatrix_columns(pick)) < w) return w;
            // next combination
            std::size_t i = w;
            while (i-- > 0) {
                if (pick[i] + (w - i) < n) {
                    ++pick[i];
                    for (std::size_t j = i + 1; j < w; ++j) pick[j] = pick[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_w;
            }
        }
    next_w:;
    }
    return n + 1;  // unreachable for nonzero codes
}

/// Brute-force dimension of the intersection of two codes by counting common
/// codewords: |C1 ∩ C2| = q^dim.
inline std::size_t intersection_dimension_by_enumeration(const LinearCode& c1,
                                                         const LinearCode& c2) {
    std::size_t common = 0;
    for (const auto& w : enumerate_codewords(c1)) {
        if (c2.contains(w)) ++common;
    }
    std::size_t dim = 0;
    std::size_t power = 1;
    while (power < common) {
        power *= c1.field()->order();
        ++dim;
    }
    return dim;
}

}  // namespace eaq::testutil
