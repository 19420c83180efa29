#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eaq/matrix.hpp"

namespace eaq {

/*
 * Evidence for a minimum-distance claim. `exhaustive` and `bch_singleton`
 * with equal bounds prove the exact distance; `mds_structural` proves
 * d = n - l + 1 through the construction; `bounds_only` carries sampling
 * bounds and proves nothing exact.
 */
struct DistanceCertificate {
    enum class Method { exhaustive, mds_structural, bch_singleton, bounds_only };

    Method method = Method::bounds_only;
    std::uint64_t d_lower = 1;
    std::uint64_t d_upper = 0;
    std::optional<std::vector<FieldElement>> witness;  // codeword of weight d_upper

    bool exact() const { return method != Method::bounds_only && d_lower == d_upper; }
};

const char* method_name(DistanceCertificate::Method m);
DistanceCertificate::Method method_from_name(const std::string& s);

std::uint64_t default_distance_budget();  // EAQ_DISTANCE_BUDGET overrides 10^7

/*
 * Linear code over GF(q), stored canonically: the generator is the RREF row
 * basis of whatever matrix the code was built from, so equal codes have equal
 * representations. The Euclidean parity check (right kernel of G) is computed
 * once and cached.
 */
class LinearCode {
public:
    static LinearCode from_generator(const MatrixGF& m, std::string provenance = "");

    const FieldPtr& field() const { return field_; }
    std::size_t length() const { return n_; }
    std::size_t dim() const { return generator_.rows(); }
    const MatrixGF& generator() const { return generator_; }
    const MatrixGF& parity_check() const { return parity_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string p) { provenance_ = std::move(p); }

    bool contains(const std::vector<FieldElement>& word) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.generator_ == b.generator_;
    }

private:
    LinearCode(FieldPtr field, std::size_t n, MatrixGF g, MatrixGF h,
               std::vector<std::size_t> pivots, std::string provenance)
        : field_(std::move(field)),
          n_(n),
          generator_(std::move(g)),
          parity_(std::move(h)),
          pivots_(std::move(pivots)),
          provenance_(std::move(provenance)) {}

    FieldPtr field_;
    std::size_t n_;
    MatrixGF generator_;
    MatrixGF parity_;
    std::vector<std::size_t> pivots_;
    std::string provenance_;
};

/// Code generated by G with every entry raised to the power p^j.
/// Same length, dimension and weight distribution.
LinearCode galois_power_code(const LinearCode& c, unsigned j);

/*
 * k-Galois dual: all x with sum_i c_i x_i^(p^k) = 0 for every codeword c.
 * Computed as the Euclidean dual of the p^(e-k) power code.
 */
LinearCode galois_dual(const LinearCode& c, unsigned k);

/// dim(C ∩ C^⊥k) via dim C + dim C^⊥k - rank of the stacked generators.
std::size_t hull_dimension(const LinearCode& c, unsigned k);

enum class LcdMethod { gram, hull, both };

/*
 * k-Galois linear complementary dual test. The Gram route checks that
 * G·G‡ is nonsingular, the hull route that dim(C ∩ C^⊥k) = 0; the two are
 * equivalent and `both` cross-checks them.
 */
bool is_k_galois_lcd(const LinearCode& c, unsigned k, LcdMethod method = LcdMethod::both);

/*
 * Exact minimum distance by enumerating one codeword per projective message
 * class when q^dim fits the budget; otherwise sampling bounds only.
 */
DistanceCertificate min_distance(const LinearCode& c,
                                 std::uint64_t budget = default_distance_budget());

/// d = n - l + 1, given a certificate proving the exact distance.
bool is_mds(const LinearCode& c, const DistanceCertificate& cert);

std::size_t hamming_weight(const std::vector<FieldElement>& word);

/*
 * A codeword of weight exactly n - dim + 1 in an MDS code: force zeros on the
 * first dim-1 coordinates; MDS-ness makes the one-dimensional solution space
 * hit the minimum weight exactly.
 */
std::vector<FieldElement> mds_min_weight_witness(const LinearCode& c);

/// Distance certificate for the dual of an MDS code, via distance duality.
DistanceCertificate mds_dual_certificate(const LinearCode& dual,
                                         const DistanceCertificate& primal_cert,
                                         std::size_t primal_dim);

}  // namespace eaq
