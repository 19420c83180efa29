#include "eaq/field.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace eaq {
namespace {

constexpr unsigned kMaxDegree = 63;  // q = p^e <= 2^64 forces e <= 63

std::uint64_t mulmod128(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (n) {
        if (n & 1) r = mulmod128(r, a, p);
        a = mulmod128(a, a, p);
        n >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d <= n / d; d == 2 ? d = 3 : d += 2) {
        if (n % d) continue;
        unsigned mult = 0;
        while (n % d == 0) {
            n /= d;
            ++mult;
        }
        out.emplace_back(d, mult);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Dense polynomials over GF(p): coefficient vectors, constant term first,
// no trailing zeros (the zero polynomial is the empty vector). Only used
// during field construction, so plain 128-bit mulmod is fine throughout.
using Poly = std::vector<std::uint64_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial f.
void poly_rem(Poly& a, const Poly& f, std::uint64_t p) {
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const std::uint64_t c = a.back();
        const std::size_t off = a.size() - 1 - df;
        if (c) {
            for (std::size_t i = 0; i < df; ++i) {
                a[off + i] = (a[off + i] + mulmod128(c, p - f[i], p)) % p;
            }
        }
        a.pop_back();
        poly_trim(a);
    }
    poly_trim(a);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = (c[i + j] + mulmod128(a[i], b[j], p)) % p;
        }
    }
    poly_rem(c, f, p);
    return c;
}

Poly poly_powx(std::uint64_t n, const Poly& f, std::uint64_t p) {
    Poly result{1};
    Poly base{0, 1};
    poly_rem(base, f, p);
    while (n) {
        if (n & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        n >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        const std::uint64_t lead_inv = powmod(b.back(), p - 2, p);
        Poly bm = b;
        for (auto& c : bm) c = mulmod128(c, lead_inv, p);
        poly_rem(a, bm, p);
        std::swap(a, b);
    }
    return a;
}

// f has no irreducible factor of degree <= deg(f)/2, hence is irreducible:
// gcd(f, x^(p^j) - x) = 1 for all j = 1..deg(f)/2.
bool poly_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    for (std::size_t j = 1; 2 * j <= deg; ++j) {
        std::uint64_t pj = 1;
        for (std::size_t t = 0; t < j; ++t) pj *= p;
        Poly g = poly_powx(pj, f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        poly_trim(g);
        Poly d = poly_gcd(f, g, p);
        if (d.size() > 1) return false;
    }
    return true;
}

}  // namespace

std::shared_ptr<const FieldSpec> FieldSpec::make(std::uint64_t p, unsigned e,
                                                 std::uint64_t size_cap) {
    if (!is_prime_u64(p)) {
        throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    }
    if (e < 1 || e > kMaxDegree) {
        throw DegreeOutOfRange("extension degree " + std::to_string(e) + " out of range");
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (q > size_cap / p) {
            throw DegreeOutOfRange("p^e exceeds the size cap");
        }
        q *= p;
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->e_ = e;
    spec->q_ = q;

    if (e == 1) {
        spec->modulus_ = {0, 1};  // x; elements are residues mod p
    } else {
        // Lexicographically smallest monic irreducible of degree e, comparing
        // coefficient sequences constant term first. Enumerating v ascending
        // with c_0 as the most significant base-p digit realizes that order.
        std::uint64_t v = 1;  // c_0 = 0 gives a multiple of x, skip that block
        for (unsigned i = 0; i + 1 < e; ++i) v *= p;
        bool found = false;
        for (; v < q; ++v) {
            Poly f(e + 1, 0);
            std::uint64_t t = v;
            for (unsigned i = 0; i < e; ++i) {
                f[e - 1 - i] = t % p;
                t /= p;
            }
            f[e] = 1;
            if (poly_irreducible(f, p)) {
                spec->modulus_ = std::move(f);
                found = true;
                break;
            }
        }
        if (!found) {
            throw DegreeOutOfRange("no irreducible modulus found");  // cannot happen
        }
    }

    spec->factors_ = factorize(q - 1);
    return spec;
}

FieldPtr make_field(std::uint64_t p, unsigned e, std::uint64_t size_cap) {
    return FieldSpec::make(p, e, size_cap);
}

bool FieldSpec::same_as(const FieldSpec& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

FieldElement FieldSpec::zero() const {
    return FieldElement(shared_from_this(), std::vector<std::uint64_t>(e_, 0));
}

FieldElement FieldSpec::one() const {
    std::vector<std::uint64_t> c(e_, 0);
    c[0] = 1 % p_;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_int(std::uint64_t v) const {
    std::vector<std::uint64_t> c(e_, 0);
    c[0] = v % p_;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_coeffs(std::vector<std::uint64_t> coeffs) const {
    if (coeffs.size() != e_) {
        throw ParameterOutOfRange("coefficient sequence has wrong length");
    }
    for (auto c : coeffs) {
        if (c >= p_) throw ParameterOutOfRange("coefficient not reduced mod p");
    }
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FieldSpec::element_at(std::uint64_t index) const {
    if (index >= q_) throw ParameterOutOfRange("element index out of range");
    std::vector<std::uint64_t> c(e_, 0);
    for (unsigned i = 0; i < e_ && index; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

std::uint64_t FieldSpec::index_of(const FieldElement& x) const {
    std::uint64_t idx = 0;
    for (unsigned i = e_; i-- > 0;) idx = idx * p_ + x.coeffs()[i];
    return idx;
}

void FieldSpec::fe_set_zero(std::uint64_t* out) const {
    std::fill(out, out + e_, 0);
}

void FieldSpec::fe_set_one(std::uint64_t* out) const {
    std::fill(out, out + e_, 0);
    out[0] = 1 % p_;
}

bool FieldSpec::fe_is_zero(const std::uint64_t* a) const {
    return std::all_of(a, a + e_, [](std::uint64_t c) { return c == 0; });
}

bool FieldSpec::fe_is_one(const std::uint64_t* a) const {
    if (a[0] != 1 % p_) return false;
    return std::all_of(a + 1, a + e_, [](std::uint64_t c) { return c == 0; });
}

void FieldSpec::fe_add(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const {
    for (unsigned i = 0; i < e_; ++i) {
        std::uint64_t s = a[i] + b[i];
        out[i] = s >= p_ ? s - p_ : s;
    }
}

void FieldSpec::fe_sub(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const {
    for (unsigned i = 0; i < e_; ++i) {
        out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
    }
}

void FieldSpec::fe_neg(const std::uint64_t* a, std::uint64_t* out) const {
    for (unsigned i = 0; i < e_; ++i) {
        out[i] = a[i] ? p_ - a[i] : 0;
    }
}

void FieldSpec::fe_mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const {
    if (e_ == 1) {
        out[0] = mulmod128(a[0], b[0], p_);
        return;
    }
    // Schoolbook convolution. Coefficients stay < p; for p below 2^28 the raw
    // 64-bit sums cannot overflow (e <= 63 terms of at most (p-1)^2 each),
    // otherwise accumulate in 128 bits.
    std::array<std::uint64_t, 2 * kMaxDegree> buf{};
    const unsigned w = 2 * e_ - 1;
    if (p_ < (1ull << 28)) {
        for (unsigned i = 0; i < e_; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < e_; ++j) buf[i + j] += a[i] * b[j];
        }
        for (unsigned i = 0; i < w; ++i) buf[i] %= p_;
    } else {
        for (unsigned i = 0; i < w; ++i) {
            unsigned __int128 acc = 0;
            const unsigned jlo = i >= e_ ? i - e_ + 1 : 0;
            const unsigned jhi = std::min(i, e_ - 1);
            for (unsigned j = jlo; j <= jhi; ++j) {
                acc += static_cast<unsigned __int128>(a[i - j]) * b[j];
            }
            buf[i] = static_cast<std::uint64_t>(acc % p_);
        }
    }
    // Reduce x^deg for deg = 2e-2 .. e using x^e = -(modulus mod x^e).
    for (unsigned deg = w; deg-- > e_;) {
        const std::uint64_t c = buf[deg];
        if (!c) continue;
        buf[deg] = 0;
        for (unsigned i = 0; i < e_; ++i) {
            if (!modulus_[i]) continue;
            const std::uint64_t t = mulmod128(c, p_ - modulus_[i], p_);
            std::uint64_t s = buf[deg - e_ + i] + t;
            buf[deg - e_ + i] = s >= p_ ? s - p_ : s;
        }
    }
    std::copy(buf.begin(), buf.begin() + e_, out);
}

void FieldSpec::fe_pow(const std::uint64_t* a, std::uint64_t n, std::uint64_t* out) const {
    std::array<std::uint64_t, kMaxDegree> base{}, acc{};
    std::copy(a, a + e_, base.begin());
    fe_set_one(acc.data());
    while (n) {
        if (n & 1) fe_mul(acc.data(), base.data(), acc.data());
        n >>= 1;
        if (n) fe_mul(base.data(), base.data(), base.data());
    }
    std::copy(acc.begin(), acc.begin() + e_, out);
}

void FieldSpec::fe_inv(const std::uint64_t* a, std::uint64_t* out) const {
    if (fe_is_zero(a)) throw DivisionByZero("inverse of zero");
    fe_pow(a, q_ - 2, out);
}

void FieldSpec::fe_frobenius(const std::uint64_t* a, unsigned j, std::uint64_t* out) const {
    j %= e_;
    if (j == 0) {
        std::copy(a, a + e_, out);
        return;
    }
    std::uint64_t pj = 1;
    for (unsigned t = 0; t < j; ++t) pj *= p_;
    fe_pow(a, pj, out);
}

// --- FieldElement ---

FieldElement::FieldElement(FieldPtr field, std::vector<std::uint64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const { return field_->fe_is_zero(coeffs_.data()); }
bool FieldElement::is_one() const { return field_->fe_is_one(coeffs_.data()); }

namespace {
void require_same_field(const FieldElement& x, const FieldElement& y) {
    if (!x.field() || !y.field() || !x.field()->same_as(*y.field())) {
        throw FieldMismatch("operands belong to different fields");
    }
}
}  // namespace

FieldElement add(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    std::vector<std::uint64_t> c(x.field()->degree());
    x.field()->fe_add(x.data(), y.data(), c.data());
    return FieldElement(x.field(), std::move(c));
}

FieldElement sub(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    std::vector<std::uint64_t> c(x.field()->degree());
    x.field()->fe_sub(x.data(), y.data(), c.data());
    return FieldElement(x.field(), std::move(c));
}

FieldElement mul(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    std::vector<std::uint64_t> c(x.field()->degree());
    x.field()->fe_mul(x.data(), y.data(), c.data());
    return FieldElement(x.field(), std::move(c));
}

FieldElement neg(const FieldElement& x) {
    std::vector<std::uint64_t> c(x.field()->degree());
    x.field()->fe_neg(x.data(), c.data());
    return FieldElement(x.field(), std::move(c));
}

FieldElement inv(const FieldElement& x) {
    std::vector<std::uint64_t> c(x.field()->degree());
    x.field()->fe_inv(x.data(), c.data());
    return FieldElement(x.field(), std::move(c));
}

FieldElement pow_u64(const FieldElement& x, std::uint64_t n) {
    std::vector<std::uint64_t> c(x.field()->degree());
    x.field()->fe_pow(x.data(), n, c.data());
    return FieldElement(x.field(), std::move(c));
}

FieldElement frobenius(const FieldElement& x, unsigned j) {
    std::vector<std::uint64_t> c(x.field()->degree());
    x.field()->fe_frobenius(x.data(), j, c.data());
    return FieldElement(x.field(), std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const { return add(*this, rhs); }
FieldElement FieldElement::operator-(const FieldElement& rhs) const { return sub(*this, rhs); }
FieldElement FieldElement::operator*(const FieldElement& rhs) const { return mul(*this, rhs); }
FieldElement FieldElement::operator-() const { return neg(*this); }

bool FieldElement::operator==(const FieldElement& rhs) const {
    if (!field_ || !rhs.field_) return field_ == rhs.field_;
    return field_->same_as(*rhs.field_) && coeffs_ == rhs.coeffs_;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    os << ']';
    return os.str();
}

std::uint64_t element_order(const FieldElement& x) {
    if (x.is_zero()) throw DivisionByZero("order of zero");
    const auto& f = *x.field();
    std::uint64_t ord = f.order() - 1;
    for (const auto& [r, mult] : f.group_order_factorization()) {
        for (unsigned t = 0; t < mult; ++t) {
            if (ord % r == 0 && pow(x, ord / r).is_one()) {
                ord /= r;
            } else {
                break;
            }
        }
    }
    return ord;
}

FieldElement primitive_element(const FieldPtr& f) {
    const std::uint64_t q = f->order();
    for (std::uint64_t idx = 1; idx < q; ++idx) {
        FieldElement x = f->element_at(idx);
        bool generator = true;
        for (const auto& [r, mult] : f->group_order_factorization()) {
            (void)mult;
            if (pow(x, (q - 1) / r).is_one()) {
                generator = false;
                break;
            }
        }
        if (generator) return x;
    }
    // q = 2 falls through the loop body with an empty factor list on idx 1.
    return f->one();
}

// --- Embedding ---

Embedding Embedding::identity(FieldPtr f) {
    Embedding e;
    e.from_ = f;
    e.to_ = std::move(f);
    e.identity_ = true;
    e.e_small_ = e.from_->degree();
    e.e_big_ = e.e_small_;
    e.powers_ = {e.from_->one()};
    return e;
}

Embedding Embedding::by_root_search(FieldPtr from, FieldPtr to) {
    if (from->characteristic() != to->characteristic() ||
        to->degree() % from->degree() != 0) {
        throw NoSuchRoot("no embedding between these fields");
    }
    if (from->same_as(*to)) return identity(std::move(from));

    const std::uint64_t p = from->characteristic();
    const unsigned es = from->degree(), eb = to->degree();
    const auto& f = from->modulus();

    // Smallest root of the small modulus inside the big field, scanning in
    // enumeration order; stable per (small field, big field) pair.
    FieldElement root = to->zero();
    bool found = false;
    std::vector<std::uint64_t> acc(eb), tmp(eb);
    for (std::uint64_t idx = 0; idx < to->order(); ++idx) {
        FieldElement y = to->element_at(idx);
        // Horner evaluation of f (prime-field coefficients) at y.
        to->fe_set_zero(acc.data());
        for (std::size_t i = f.size(); i-- > 0;) {
            to->fe_mul(acc.data(), y.data(), tmp.data());
            std::copy(tmp.begin(), tmp.end(), acc.begin());
            acc[0] = (acc[0] + f[i]) % p;
        }
        if (to->fe_is_zero(acc.data())) {
            root = y;
            found = true;
            break;
        }
    }
    if (!found) throw NoSuchRoot("small modulus has no root in the big field");

    Embedding e;
    e.from_ = std::move(from);
    e.to_ = std::move(to);
    e.e_small_ = es;
    e.e_big_ = eb;
    e.powers_.reserve(es);
    FieldElement pw = e.to_->one();
    for (unsigned i = 0; i < es; ++i) {
        e.powers_.push_back(pw);
        if (i + 1 < es) pw = mul(pw, root);
    }

    // Row-reduce (M | I) over GF(p), M's columns being the coordinate vectors
    // of root^i. The right block then solves M c = y by matrix-vector product.
    const unsigned cols = es + eb;
    std::vector<std::uint64_t> A(static_cast<std::size_t>(eb) * cols, 0);
    for (unsigned i = 0; i < es; ++i) {
        for (unsigned r = 0; r < eb; ++r) A[static_cast<std::size_t>(r) * cols + i] = e.powers_[i].coeffs()[r];
    }
    for (unsigned r = 0; r < eb; ++r) A[static_cast<std::size_t>(r) * cols + es + r] = 1;

    unsigned row = 0;
    for (unsigned col = 0; col < es && row < eb; ++col) {
        unsigned piv = row;
        while (piv < eb && A[static_cast<std::size_t>(piv) * cols + col] == 0) ++piv;
        if (piv == eb) throw NoSuchRoot("embedding images are linearly dependent");  // cannot happen
        if (piv != row) {
            for (unsigned c = 0; c < cols; ++c) {
                std::swap(A[static_cast<std::size_t>(piv) * cols + c], A[static_cast<std::size_t>(row) * cols + c]);
            }
        }
        const std::uint64_t inv_piv = powmod(A[static_cast<std::size_t>(row) * cols + col], p - 2, p);
        for (unsigned c = 0; c < cols; ++c) {
            A[static_cast<std::size_t>(row) * cols + c] =
                mulmod128(A[static_cast<std::size_t>(row) * cols + c], inv_piv, p);
        }
        for (unsigned r = 0; r < eb; ++r) {
            if (r == row) continue;
            const std::uint64_t fmul = A[static_cast<std::size_t>(r) * cols + col];
            if (!fmul) continue;
            for (unsigned c = 0; c < cols; ++c) {
                const std::uint64_t t = mulmod128(fmul, A[static_cast<std::size_t>(row) * cols + c], p);
                auto& cell = A[static_cast<std::size_t>(r) * cols + c];
                cell = (cell + p - t) % p;
            }
        }
        ++row;
    }

    e.solver_.assign(static_cast<std::size_t>(eb) * eb, 0);
    for (unsigned r = 0; r < eb; ++r) {
        for (unsigned c = 0; c < eb; ++c) {
            e.solver_[static_cast<std::size_t>(r) * eb + c] = A[static_cast<std::size_t>(r) * cols + es + c];
        }
    }
    return e;
}

FieldElement Embedding::apply(const FieldElement& x) const {
    if (!x.field()->same_as(*from_)) throw FieldMismatch("element not in the embedding's domain");
    if (identity_) return x;
    const std::uint64_t p = to_->characteristic();
    std::vector<std::uint64_t> acc(e_big_, 0);
    for (unsigned i = 0; i < e_small_; ++i) {
        const std::uint64_t s = x.coeffs()[i];
        if (!s) continue;
        const auto& pw = powers_[i].coeffs();
        for (unsigned r = 0; r < e_big_; ++r) {
            acc[r] = (acc[r] + mulmod128(s, pw[r], p)) % p;
        }
    }
    return FieldElement(to_, std::move(acc));
}

FieldElement Embedding::preimage(const FieldElement& y) const {
    if (!y.field()->same_as(*to_)) throw FieldMismatch("element not in the embedding's codomain");
    if (identity_) return y;
    const std::uint64_t p = to_->characteristic();
    std::vector<std::uint64_t> z(e_big_, 0);
    for (unsigned r = 0; r < e_big_; ++r) {
        unsigned __int128 acc = 0;
        for (unsigned c = 0; c < e_big_; ++c) {
            acc += static_cast<unsigned __int128>(solver_[static_cast<std::size_t>(r) * e_big_ + c]) * y.coeffs()[c];
        }
        z[r] = static_cast<std::uint64_t>(acc % p);
    }
    for (unsigned r = e_small_; r < e_big_; ++r) {
        if (z[r] != 0) throw CoefficientNotInBaseField("element lies outside the embedded subfield");
    }
    z.resize(e_small_);
    return FieldElement(from_, std::move(z));
}

ExtensionField extension_field(const FieldPtr& f, unsigned m, std::uint64_t size_cap) {
    if (m < 1) throw DegreeOutOfRange("extension multiplier must be positive");
    if (m == 1) return {f, Embedding::identity(f)};
    const std::uint64_t p = f->characteristic();
    std::uint64_t big = 1;
    for (unsigned i = 0; i < static_cast<unsigned>(f->degree()) * m; ++i) {
        if (big > size_cap / p) throw SizeCapExceeded("extension field exceeds the size cap");
        big *= p;
    }
    FieldPtr to = make_field(p, f->degree() * m, size_cap);
    return {to, Embedding::by_root_search(f, to)};
}

FieldElement nth_root_of_unity(const FieldPtr& f, std::uint64_t rn,
                               const FieldElement& lambda, std::uint64_t n) {
    if (!lambda.field()->same_as(*f)) throw FieldMismatch("lambda not in the target field");
    if (rn == 0 || (f->order() - 1) % rn != 0) {
        throw NoSuchRoot("rn does not divide the group order");
    }
    if (std::gcd(n, f->characteristic()) != 1) {
        throw PreconditionViolated("n must be coprime to the characteristic");
    }
    const auto rn_factors = factorize(rn);
    std::vector<std::uint64_t> t(f->degree());
    for (std::uint64_t idx = 1; idx < f->order(); ++idx) {
        FieldElement y = f->element_at(idx);
        f->fe_pow(y.data(), rn, t.data());
        if (!f->fe_is_one(t.data())) continue;
        f->fe_pow(y.data(), n, t.data());
        if (!std::equal(t.begin(), t.end(), lambda.coeffs().begin())) continue;
        bool exact = true;
        for (const auto& [s, mult] : rn_factors) {
            (void)mult;
            f->fe_pow(y.data(), rn / s, t.data());
            if (f->fe_is_one(t.data())) {
                exact = false;
                break;
            }
        }
        if (exact) return y;
    }
    throw NoSuchRoot("no primitive rn-th root with the requested n-th power");
}

}  // namespace eaq
