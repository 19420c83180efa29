#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "eaq/errors.hpp"

namespace eaq {

class FieldElement;

/*
 * A concrete realization of GF(p^e).
 *
 * Elements are polynomial representatives over GF(p) modulo a fixed monic
 * irreducible modulus of degree e, stored constant term first. The modulus
 * is pinned to the lexicographically smallest monic irreducible polynomial
 * (comparing coefficient sequences from the constant term upward), so the
 * same (p, e) always produces the same field realization.
 *
 * Immutable after construction; safe to share across threads.
 */
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    static constexpr std::uint64_t kDefaultSizeCap = UINT64_MAX;

    static std::shared_ptr<const FieldSpec> make(std::uint64_t p, unsigned e,
                                                 std::uint64_t size_cap = kDefaultSizeCap);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    std::uint64_t order() const { return q_; }

    /// Monic modulus polynomial, constant term first, length degree()+1.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    /// Prime factorization of q-1 as (prime, multiplicity) pairs, ascending.
    const std::vector<std::pair<std::uint64_t, unsigned>>& group_order_factorization() const {
        return factors_;
    }

    /// Structural equality: same p, e and modulus.
    bool same_as(const FieldSpec& other) const;

    FieldElement zero() const;
    FieldElement one() const;
    /// The prime-subfield element c*1 (c taken mod p).
    FieldElement from_int(std::uint64_t c) const;
    FieldElement from_coeffs(std::vector<std::uint64_t> coeffs) const;
    /// Element number `index` in enumeration order: the coefficient sequence
    /// of an element read as a base-p integer (constant term = least
    /// significant digit). All "first element such that ..." searches in this
    /// library use this order.
    FieldElement element_at(std::uint64_t index) const;
    std::uint64_t index_of(const FieldElement& x) const;

    // Low-level arithmetic on raw coefficient blocks of length degree().
    // Inputs must be reduced (< p); outputs are reduced. Aliasing is allowed.
    void fe_set_zero(std::uint64_t* out) const;
    void fe_set_one(std::uint64_t* out) const;
    bool fe_is_zero(const std::uint64_t* a) const;
    bool fe_is_one(const std::uint64_t* a) const;
    void fe_add(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const;
    void fe_sub(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const;
    void fe_neg(const std::uint64_t* a, std::uint64_t* out) const;
    void fe_mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const;
    void fe_pow(const std::uint64_t* a, std::uint64_t n, std::uint64_t* out) const;
    void fe_inv(const std::uint64_t* a, std::uint64_t* out) const;
    void fe_frobenius(const std::uint64_t* a, unsigned j, std::uint64_t* out) const;

private:
    FieldSpec() = default;

    std::uint64_t p_ = 0;
    unsigned e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::pair<std::uint64_t, unsigned>> factors_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Convenience wrapper for FieldSpec::make.
FieldPtr make_field(std::uint64_t p, unsigned e,
                    std::uint64_t size_cap = FieldSpec::kDefaultSizeCap);

/// An element of a specific FieldSpec: e residues mod p, constant term first.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<std::uint64_t> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    const std::uint64_t* data() const { return coeffs_.data(); }
    std::uint64_t* data() { return coeffs_.data(); }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<std::uint64_t> coeffs_;
};

FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldElement& x, const FieldElement& y);
FieldElement mul(const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldElement& x);
FieldElement inv(const FieldElement& x);

FieldElement pow_u64(const FieldElement& x, std::uint64_t n);

/// x^n; negative n inverts first (DivisionByZero when x = 0).
template <typename T>
    requires std::is_integral_v<T>
FieldElement pow(const FieldElement& x, T n) {
    if constexpr (std::is_signed_v<T>) {
        if (n < 0) {
            if (x.is_zero()) throw DivisionByZero("negative power of zero");
            const auto mag = static_cast<std::uint64_t>(-static_cast<std::int64_t>(n + 1)) + 1;
            return pow_u64(inv(x), mag);
        }
    }
    return pow_u64(x, static_cast<std::uint64_t>(n));
}

/// x^(p^j). j is taken mod e, so composing e times is the identity.
FieldElement frobenius(const FieldElement& x, unsigned j);

/// Least n >= 1 with x^n = 1, by dividing prime factors out of q-1.
std::uint64_t element_order(const FieldElement& x);

/// First element in enumeration order whose multiplicative order is q-1.
FieldElement primitive_element(const FieldPtr& f);

/*
 * Embedding of GF(q) into GF(q^m), defined by sending the canonical
 * generator of the small field (the class of x) to the first root of the
 * small modulus in the big field, in enumeration order. A ring homomorphism,
 * injective, identity on GF(p).
 */
class Embedding {
public:
    static Embedding identity(FieldPtr f);
    static Embedding by_root_search(FieldPtr from, FieldPtr to);

    const FieldPtr& from() const { return from_; }
    const FieldPtr& to() const { return to_; }
    bool is_identity() const { return identity_; }

    FieldElement apply(const FieldElement& x) const;
    /// Inverse of apply on its image; throws CoefficientNotInBaseField
    /// when y is outside the embedded copy of the small field.
    FieldElement preimage(const FieldElement& y) const;

    /// Image of the class of x (the small field's canonical generator).
    const FieldElement& generator_image() const { return powers_[e_small_ > 1 ? 1 : 0]; }

private:
    Embedding() = default;

    FieldPtr from_, to_;
    bool identity_ = false;
    unsigned e_small_ = 0, e_big_ = 0;
    std::vector<FieldElement> powers_;       // root^i for i < e_small
    std::vector<std::uint64_t> solver_;      // row-reduction transform, e_big x e_big over GF(p)
};

struct ExtensionField {
    FieldPtr field;
    Embedding embedding;
};

/// GF(p^(e*m)) together with the embedding GF(p^e) -> GF(p^(e*m)).
ExtensionField extension_field(const FieldPtr& f, unsigned m,
                               std::uint64_t size_cap = FieldSpec::kDefaultSizeCap);

/*
 * First element of exact multiplicative order rn whose n-th power equals
 * lambda, in enumeration order. lambda must already live in f. Used to pin
 * the root of unity that identifies constacyclic codes with defining sets.
 */
FieldElement nth_root_of_unity(const FieldPtr& f, std::uint64_t rn,
                               const FieldElement& lambda, std::uint64_t n);

}  // namespace eaq
