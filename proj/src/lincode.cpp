#include "eaq/lincode.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <random>

namespace eaq {

const char* method_name(DistanceCertificate::Method m) {
    switch (m) {
        case DistanceCertificate::Method::exhaustive: return "exhaustive";
        case DistanceCertificate::Method::mds_structural: return "mds-structural";
        case DistanceCertificate::Method::bch_singleton: return "bch-singleton";
        case DistanceCertificate::Method::bounds_only: return "bounds-only";
    }
    return "?";
}

DistanceCertificate::Method method_from_name(const std::string& s) {
    if (s == "exhaustive") return DistanceCertificate::Method::exhaustive;
    if (s == "mds-structural") return DistanceCertificate::Method::mds_structural;
    if (s == "bch-singleton") return DistanceCertificate::Method::bch_singleton;
    if (s == "bounds-only") return DistanceCertificate::Method::bounds_only;
    throw ParameterOutOfRange("unknown distance method: " + s);
}

std::uint64_t default_distance_budget() {
    static const std::uint64_t value = [] {
        if (const char* env = std::getenv("EAQ_DISTANCE_BUDGET")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return static_cast<std::uint64_t>(10'000'000);
    }();
    return value;
}

LinearCode LinearCode::from_generator(const MatrixGF& m, std::string provenance) {
    if (m.cols() == 0) throw EmptyMatrix("code length must be positive");
    RrefResult r = rref(m);
    MatrixGF g(m.field(), r.rank, m.cols());
    const unsigned ew = m.field()->degree();
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::copy(r.reduced.raw(i, 0), r.reduced.raw(i, 0) + m.cols() * ew, g.raw(i, 0));
    }
    MatrixGF h = right_kernel(g);
    return LinearCode(m.field(), m.cols(), std::move(g), std::move(h), std::move(r.pivots),
                      std::move(provenance));
}

bool LinearCode::contains(const std::vector<FieldElement>& word) const {
    if (word.size() != n_) throw ShapeMismatch("word length differs from code length");
    const auto& f = *field_;
    std::array<std::uint64_t, 63> acc{}, t{};
    for (std::size_t r = 0; r < parity_.rows(); ++r) {
        f.fe_set_zero(acc.data());
        for (std::size_t j = 0; j < n_; ++j) {
            if (!f.same_as(*word[j].field())) throw FieldMismatch("word entry in wrong field");
            f.fe_mul(parity_.raw(r, j), word[j].data(), t.data());
            f.fe_add(acc.data(), t.data(), acc.data());
        }
        if (!f.fe_is_zero(acc.data())) return false;
    }
    return true;
}

LinearCode galois_power_code(const LinearCode& c, unsigned j) {
    return LinearCode::from_generator(entrywise_frobenius(c.generator(), j), c.provenance());
}

LinearCode galois_dual(const LinearCode& c, unsigned k) {
    const unsigned e = c.field()->degree();
    MatrixGF powered = entrywise_frobenius(c.generator(), (e - (k % e)) % e);
    return LinearCode::from_generator(right_kernel(powered));
}

std::size_t hull_dimension(const LinearCode& c, unsigned k) {
    LinearCode dual = galois_dual(c, k);
    if (c.dim() == 0 || dual.dim() == 0) return 0;
    const std::size_t stacked = rank(vstack(c.generator(), dual.generator()));
    return c.dim() + dual.dim() - stacked;
}

namespace {

// G is stored in RREF, so the pivot columns of G·G‡ contribute exactly the
// identity; only the non-pivot columns need the product.
bool lcd_by_gram(const LinearCode& c, unsigned k) {
    const std::size_t l = c.dim();
    if (l == 0) return true;  // the zero code meets its dual trivially
    std::vector<std::size_t> non_pivot;
    non_pivot.reserve(c.length() - l);
    std::size_t next = 0;
    const auto& piv = c.pivots();
    for (std::size_t col = 0; col < c.length(); ++col) {
        if (next < piv.size() && piv[next] == col) {
            ++next;
        } else {
            non_pivot.push_back(col);
        }
    }
    MatrixGF np = c.generator().submatrix_columns(non_pivot);
    MatrixGF gram = mat_mul(np, galois_conj_transpose(np, k));
    const auto& f = *c.field();
    std::array<std::uint64_t, 63> one{};
    f.fe_set_one(one.data());
    for (std::size_t i = 0; i < l; ++i) {
        f.fe_add(gram.raw(i, i), one.data(), gram.raw(i, i));
    }
    return !det(gram).is_zero();
}

}  // namespace

bool is_k_galois_lcd(const LinearCode& c, unsigned k, LcdMethod method) {
    switch (method) {
        case LcdMethod::gram:
            return lcd_by_gram(c, k);
        case LcdMethod::hull:
            return hull_dimension(c, k) == 0;
        case LcdMethod::both: {
            const bool g = lcd_by_gram(c, k);
            const bool h = hull_dimension(c, k) == 0;
            if (g != h) {
                throw MethodDisagreement("gram and hull LCD tests disagree");
            }
            return g;
        }
    }
    return false;
}

namespace {

// q^l <= budget, computed without overflow.
bool within_budget(std::uint64_t q, std::size_t l, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < l; ++i) {
        if (total > budget / q) return false;
        total *= q;
    }
    return total <= budget;
}

}  // namespace

DistanceCertificate min_distance(const LinearCode& c, std::uint64_t budget) {
    const std::size_t l = c.dim();
    const std::size_t n = c.length();
    if (l == 0) throw EmptyCode("minimum distance of the zero code is undefined");
    const auto& f = *c.field();
    const std::uint64_t q = f.order();
    const unsigned ew = f.degree();

    std::array<std::uint64_t, 63> t{};
    std::vector<std::uint64_t> cw(n * ew);

    auto codeword_weight = [&](const std::vector<std::uint64_t>& msg,
                               std::size_t lead) -> std::size_t {
        std::fill(cw.begin(), cw.end(), 0);
        for (std::size_t i = lead; i < l; ++i) {
            const std::uint64_t* mi = msg.data() + i * ew;
            if (f.fe_is_zero(mi)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const std::uint64_t* g = c.generator().raw(i, j);
                if (f.fe_is_zero(g)) continue;
                f.fe_mul(mi, g, t.data());
                f.fe_add(cw.data() + j * ew, t.data(), cw.data() + j * ew);
            }
        }
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!f.fe_is_zero(cw.data() + j * ew)) ++w;
        }
        return w;
    };

    auto snapshot = [&]() {
        std::vector<FieldElement> word;
        word.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            word.push_back(FieldElement(
                c.field(),
                std::vector<std::uint64_t>(cw.begin() + j * ew, cw.begin() + (j + 1) * ew)));
        }
        return word;
    };

    DistanceCertificate cert;
    if (within_budget(q, l, budget)) {
        // One representative per projective class: first nonzero message
        // coordinate normalized to 1; the tail counts in base q with the
        // coordinate just after the lead as the fastest digit.
        std::size_t best = n + 1;
        std::vector<FieldElement> witness;
        std::vector<std::uint64_t> msg(l * ew, 0);
        for (std::size_t lead = 0; lead < l; ++lead) {
            std::fill(msg.begin(), msg.end(), 0);
            f.fe_set_one(msg.data() + lead * ew);
            std::vector<std::uint64_t> counter(l > lead + 1 ? l - lead - 1 : 0, 0);
            bool done = false;
            while (!done) {
                const std::size_t w = codeword_weight(msg, lead);
                if (w < best) {
                    best = w;
                    witness = snapshot();
                }
                done = true;
                for (std::size_t pos = 0; pos < counter.size(); ++pos) {
                    if (++counter[pos] < q) {
                        const FieldElement v = f.element_at(counter[pos]);
                        std::copy(v.coeffs().begin(), v.coeffs().end(),
                                  msg.data() + (lead + 1 + pos) * ew);
                        done = false;
                        break;
                    }
                    counter[pos] = 0;
                    f.fe_set_zero(msg.data() + (lead + 1 + pos) * ew);
                }
            }
        }
        cert.method = DistanceCertificate::Method::exhaustive;
        cert.d_lower = cert.d_upper = best;
        cert.witness = std::move(witness);
    } else {
        // Sampling upper bound only; fixed seed keeps runs reproducible.
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
        std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
        std::size_t best = n + 1;
        std::vector<FieldElement> witness;
        std::vector<std::uint64_t> msg(l * ew, 0);
        for (int iter = 0; iter < 2000; ++iter) {
            bool nonzero = false;
            for (std::size_t i = 0; i < l; ++i) {
                const FieldElement v = f.element_at(dist(rng));
                std::copy(v.coeffs().begin(), v.coeffs().end(), msg.data() + i * ew);
                nonzero |= !v.is_zero();
            }
            if (!nonzero) continue;
            const std::size_t w = codeword_weight(msg, 0);
            if (w < best) {
                best = w;
                witness = snapshot();
            }
        }
        cert.method = DistanceCertificate::Method::bounds_only;
        cert.d_lower = 1;
        cert.d_upper = best;
        cert.witness = std::move(witness);
    }
    return cert;
}

bool is_mds(const LinearCode& c, const DistanceCertificate& cert) {
    if (!cert.exact()) throw InexactDistance("certificate does not prove the exact distance");
    return cert.d_upper == c.length() - c.dim() + 1;
}

std::size_t hamming_weight(const std::vector<FieldElement>& word) {
    std::size_t w = 0;
    for (const auto& x : word) {
        if (!x.is_zero()) ++w;
    }
    return w;
}

std::vector<FieldElement> mds_min_weight_witness(const LinearCode& c) {
    const std::size_t dim = c.dim();
    const std::size_t n = c.length();
    if (dim == 0) throw EmptyCode("zero code has no codewords");
    MatrixGF msg_basis(c.field(), 1, dim);
    if (dim == 1) {
        c.field()->fe_set_one(msg_basis.raw(0, 0));
    } else {
        std::vector<std::size_t> first(dim - 1);
        for (std::size_t j = 0; j < dim - 1; ++j) first[j] = j;
        MatrixGF constraints = transpose(c.generator().submatrix_columns(first));
        MatrixGF kern = right_kernel(constraints);
        if (kern.rows() == 0) throw RankMismatch("no message vanishing on dim-1 coordinates");
        const unsigned ew = c.field()->degree();
        std::copy(kern.raw(0, 0), kern.raw(0, 0) + dim * ew, msg_basis.raw(0, 0));
    }
    MatrixGF cw = mat_mul(msg_basis, c.generator());
    std::vector<FieldElement> word;
    word.reserve(n);
    for (std::size_t j = 0; j < n; ++j) word.push_back(cw.at(0, j));
    if (hamming_weight(word) != n - dim + 1) {
        throw RankMismatch("witness weight differs from n - dim + 1; code is not MDS");
    }
    return word;
}

DistanceCertificate mds_dual_certificate(const LinearCode& dual,
                                         const DistanceCertificate& primal_cert,
                                         std::size_t primal_dim) {
    if (!primal_cert.exact()) {
        throw InexactDistance("duality needs an exact distance on the primal");
    }
    const std::size_t n = dual.length();
    if (primal_cert.d_upper != n - primal_dim + 1) {
        throw PreconditionViolated("primal code is not MDS");
    }
    DistanceCertificate cert;
    cert.method = DistanceCertificate::Method::mds_structural;
    cert.d_lower = cert.d_upper = n - dual.dim() + 1;
    cert.witness = mds_min_weight_witness(dual);
    return cert;
}

}  // namespace eaq
