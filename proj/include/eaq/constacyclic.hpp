#pragma once

#include <cstdint>
#include <vector>

#include "eaq/lincode.hpp"

namespace eaq {

/*
 * Everything needed to identify λ-constacyclic codes of length n over GF(q)
 * with subsets of 1 + rZ_rn: the order r of λ, the multiplicative order m of
 * q mod rn, the splitting field GF(q^m) and a primitive rn-th root of unity
 * θ there with θ^n = λ. θ is pinned to the first qualifying element in
 * enumeration order, so the identification is reproducible.
 */
struct ConstacyclicSpec {
    FieldPtr field;
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    FieldElement lambda;
    unsigned m = 0;
    FieldPtr big;
    Embedding embedding;
    FieldElement theta;

    std::uint64_t rn() const { return r * n; }
};

ConstacyclicSpec make_constacyclic_spec(const FieldPtr& field, std::uint64_t n,
                                        const FieldElement& lambda);

/*
 * q-cyclotomic cosets partitioning 1 + rZ_rn: orbits of residues under
 * multiplication by q mod rn. Each coset is sorted; cosets are ordered by
 * their smallest member.
 */
std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t q, std::uint64_t r,
                                                          std::uint64_t n);

/// Sorted subset of {1, 1+r, ..., 1+r(n-1)} mod rn, closed under *q.
struct DefiningSet {
    std::uint64_t r = 0;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> members;  // sorted, unique

    std::uint64_t rn() const { return r * n; }
};

DefiningSet make_defining_set(std::uint64_t r, std::uint64_t n,
                              std::vector<std::uint64_t> members, std::uint64_t q);

/*
 * The λ-constacyclic code whose generator polynomial is ∏_{i∈P}(x - θ^i);
 * coefficients are computed in GF(q^m) and pulled back through the
 * embedding. Dimension is n - |P|.
 */
LinearCode code_from_defining_set(const ConstacyclicSpec& spec, const DefiningSet& pset);

/*
 * Largest δ such that P contains a run {1+rh, ..., 1+r(h+δ-2)} of consecutive
 * defining-set elements (no wraparound); the code's distance is at least δ.
 */
std::uint64_t bch_lower_bound(const DefiningSet& pset);

/// λ^(-p^(e-k)): the unit of the k-Galois dual of a λ-constacyclic code.
FieldElement dual_constacyclic_unit(const FieldElement& lambda, unsigned k);

/*
 * k-Galois LCD test on the defining set alone: when λ^(1+p^(e-k)) != 1 every
 * λ-constacyclic code is k-Galois LCD; otherwise the criterion is
 * -p^k P = P mod rn.
 */
bool lcd_test_defining_set(const DefiningSet& pset, const FieldElement& lambda, unsigned k);

/// (λ c_n, c_1, ..., c_{n-1})
std::vector<FieldElement> constacyclic_shift(const std::vector<FieldElement>& word,
                                             const FieldElement& lambda);

/// Every generator row stays in the code after the λ-shift.
bool is_shift_closed(const LinearCode& code, const FieldElement& lambda);

struct ConstacyclicResult {
    LinearCode code;
    DistanceCertificate cert;
    ConstacyclicSpec spec;
    DefiningSet pset;
    FieldElement alpha;
};

/*
 * Constacyclic k-Galois LCD MDS codes of length n = (q-1)/r: defining set
 * {1, 1+r, ..., 1+r(d-2)} (all cosets are singletons since q = 1 mod rn),
 * BCH bound d meeting the Singleton bound. Requires r | q-1 and
 * r not dividing 1 + p^(e-k), which makes every λ-constacyclic code LCD.
 */
ConstacyclicResult family_ii(const FieldPtr& field, unsigned k, std::uint64_t r,
                             std::uint64_t d);

/*
 * Negacyclic 1-Galois LCD MDS codes of length (p-1)/2 over GF(p^e), e >= 2,
 * found by scanning consecutive defining-set runs for the symmetry
 * -p P = P. |P| = 2l when p = 1 mod 4 (distance 2l+1), 2l-1 when p = 3 mod 4
 * (distance 2l). Throws ConstructionNotFound if no run qualifies.
 */
ConstacyclicResult family_iv(std::uint64_t p, unsigned e, std::uint64_t l);

}  // namespace eaq
