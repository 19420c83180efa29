#include "eaq/constacyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace eaq {
namespace {

std::uint64_t mulmod128(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::string u64s(std::uint64_t v) { return std::to_string(v); }

}  // namespace

ConstacyclicSpec make_constacyclic_spec(const FieldPtr& field, std::uint64_t n,
                                        const FieldElement& lambda) {
    if (!lambda.field()->same_as(*field)) throw FieldMismatch("lambda not in the given field");
    if (lambda.is_zero()) throw DivisionByZero("lambda must be a unit");
    if (n == 0 || std::gcd(n, field->characteristic()) != 1) {
        throw NotCoprime("length must be positive and coprime to the characteristic");
    }
    ConstacyclicSpec spec;
    spec.field = field;
    spec.n = n;
    spec.lambda = lambda;
    spec.r = element_order(lambda);
    const std::uint64_t rn = spec.rn();

    // multiplicative order of q mod rn
    const std::uint64_t qmod = field->order() % rn;
    std::uint64_t acc = qmod % rn;
    unsigned m = 1;
    while (acc != 1 % rn) {
        acc = mulmod128(acc, qmod, rn);
        ++m;
        if (m > rn) throw NotCoprime("q has no multiplicative order mod rn");  // gcd(q, rn) != 1
    }
    spec.m = m;

    ExtensionField ext = extension_field(field, m);
    spec.big = ext.field;
    spec.embedding = std::move(ext.embedding);
    spec.theta = nth_root_of_unity(spec.big, rn, spec.embedding.apply(lambda), n);
    return spec;
}

std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t q, std::uint64_t r,
                                                          std::uint64_t n) {
    const std::uint64_t rn = r * n;
    if (std::gcd(q % rn, rn) != 1) throw NotCoprime("q must be coprime to rn");
    std::set<std::uint64_t> seen;
    std::vector<std::vector<std::uint64_t>> cosets;
    for (std::uint64_t j = 0; j < n; ++j) {
        const std::uint64_t i = (1 + r * j) % rn;
        if (seen.count(i)) continue;
        std::vector<std::uint64_t> coset;
        std::uint64_t cur = i;
        do {
            coset.push_back(cur);
            seen.insert(cur);
            cur = mulmod128(cur, q % rn, rn);
        } while (cur != i);
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    std::sort(cosets.begin(), cosets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cosets;
}

DefiningSet make_defining_set(std::uint64_t r, std::uint64_t n,
                              std::vector<std::uint64_t> members, std::uint64_t q) {
    DefiningSet p;
    p.r = r;
    p.n = n;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const std::uint64_t rn = r * n;
    std::set<std::uint64_t> as_set(members.begin(), members.end());
    for (const std::uint64_t i : members) {
        if (i >= rn || i % r != 1 % r) {
            throw InvalidDefiningSet("member " + u64s(i) + " outside 1 + rZ_rn");
        }
        if (!as_set.count(mulmod128(i, q % rn, rn))) {
            throw InvalidDefiningSet("set is not a union of q-cyclotomic cosets");
        }
    }
    p.members = std::move(members);
    return p;
}

LinearCode code_from_defining_set(const ConstacyclicSpec& spec, const DefiningSet& pset) {
    if (pset.r != spec.r || pset.n != spec.n) {
        throw InvalidDefiningSet("defining set does not match the constacyclic parameters");
    }
    const std::uint64_t rn = spec.rn();
    std::set<std::uint64_t> members(pset.members.begin(), pset.members.end());
    for (const std::uint64_t i : pset.members) {
        if (i >= rn || i % spec.r != 1 % spec.r) {
            throw InvalidDefiningSet("member outside 1 + rZ_rn");
        }
        if (!members.count(mulmod128(i, spec.field->order() % rn, rn))) {
            throw InvalidDefiningSet("set is not a union of q-cyclotomic cosets");
        }
    }

    // g(x) = prod_{i in P} (x - theta^i) over GF(q^m), pulled back to GF(q).
    const auto& big = spec.big;
    std::vector<FieldElement> g{big->one()};
    for (const std::uint64_t i : pset.members) {
        const FieldElement root = pow(spec.theta, i);
        g.push_back(big->zero());
        for (std::size_t t = g.size(); t-- > 1;) {
            g[t] = sub(t > 0 ? g[t - 1] : big->zero(), mul(root, g[t]));
        }
        g[0] = neg(mul(root, g[0]));
    }
    std::vector<FieldElement> gq;
    gq.reserve(g.size());
    for (const auto& c : g) gq.push_back(spec.embedding.preimage(c));

    const std::size_t deg = pset.members.size();
    const std::size_t l = spec.n - deg;
    MatrixGF gen(spec.field, l, spec.n);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t t = 0; t <= deg; ++t) gen.set(i, i + t, gq[t]);
    }

    std::ostringstream prov;
    prov << "constacyclic(q=" << spec.field->order() << ",n=" << spec.n << ",r=" << spec.r
         << ",lambda=" << spec.lambda.to_string() << ",|P|=" << deg << ")";
    return LinearCode::from_generator(gen, prov.str());
}

std::uint64_t bch_lower_bound(const DefiningSet& pset) {
    if (pset.members.empty()) return 1;
    // longest run of consecutive j with 1 + rj in P, no wraparound
    std::vector<std::uint64_t> js;
    js.reserve(pset.members.size());
    for (const std::uint64_t i : pset.members) js.push_back((i - (1 % pset.r)) / pset.r);
    std::sort(js.begin(), js.end());
    std::uint64_t best = 1, run = 1;
    for (std::size_t t = 1; t < js.size(); ++t) {
        run = (js[t] == js[t - 1] + 1) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best + 1;
}

FieldElement dual_constacyclic_unit(const FieldElement& lambda, unsigned k) {
    if (lambda.is_zero()) throw DivisionByZero("lambda must be a unit");
    const auto& f = *lambda.field();
    const unsigned e = f.degree();
    std::uint64_t pek = 1;  // p^(e-k); lambda^(p^e) = lambda makes the k=0 case p^0
    for (unsigned t = 0; t < (e - (k % e)) % e; ++t) pek *= f.characteristic();
    return inv(pow(lambda, pek));
}

bool lcd_test_defining_set(const DefiningSet& pset, const FieldElement& lambda, unsigned k) {
    const auto& f = *lambda.field();
    const unsigned e = f.degree();
    std::uint64_t pek = 1, pk = 1;
    for (unsigned t = 0; t < (e - (k % e)) % e; ++t) pek *= f.characteristic();
    for (unsigned t = 0; t < k % e; ++t) pk *= f.characteristic();
    if (!mul(lambda, pow(lambda, pek)).is_one()) {
        return true;  // every lambda-constacyclic code is k-Galois LCD here
    }
    const std::uint64_t rn = pset.rn();
    std::vector<std::uint64_t> mapped;
    mapped.reserve(pset.members.size());
    for (const std::uint64_t i : pset.members) {
        const std::uint64_t t = mulmod128(i, pk % rn, rn);
        mapped.push_back(t == 0 ? 0 : rn - t);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == pset.members;
}

std::vector<FieldElement> constacyclic_shift(const std::vector<FieldElement>& word,
                                             const FieldElement& lambda) {
    std::vector<FieldElement> out;
    out.reserve(word.size());
    out.push_back(mul(lambda, word.back()));
    for (std::size_t i = 0; i + 1 < word.size(); ++i) out.push_back(word[i]);
    return out;
}

bool is_shift_closed(const LinearCode& code, const FieldElement& lambda) {
    for (std::size_t i = 0; i < code.dim(); ++i) {
        std::vector<FieldElement> row;
        row.reserve(code.length());
        for (std::size_t j = 0; j < code.length(); ++j) row.push_back(code.generator().at(i, j));
        if (!code.contains(constacyclic_shift(row, lambda))) return false;
    }
    return true;
}

ConstacyclicResult family_ii(const FieldPtr& field, unsigned k, std::uint64_t r,
                             std::uint64_t d) {
    const std::uint64_t p = field->characteristic();
    const unsigned e = field->degree();
    const std::uint64_t q = field->order();
    if (p == 2) throw PreconditionViolated("family ii requires odd characteristic");
    if (k >= e) throw PreconditionViolated("family ii requires 0 <= k < e");
    if (r == 0 || (q - 1) % r != 0) throw PreconditionViolated("family ii requires r | q-1");
    std::uint64_t pek = 1;
    for (unsigned t = 0; t < e - k; ++t) pek *= p;
    if ((1 + pek % r) % r == 0) {
        throw PreconditionViolated("family ii requires r not dividing 1 + p^(e-k)");
    }
    const std::uint64_t n = (q - 1) / r;
    if (d < 2 || d > n) throw PreconditionViolated("family ii requires 2 <= d <= n");

    const FieldElement alpha = primitive_element(field);
    const FieldElement lambda = pow(alpha, (q - 1) / r);
    ConstacyclicSpec spec = make_constacyclic_spec(field, n, lambda);

    std::vector<std::uint64_t> members;
    members.reserve(d - 1);
    for (std::uint64_t j = 0; j + 2 <= d; ++j) members.push_back(1 + r * j);
    DefiningSet pset = make_defining_set(r, n, std::move(members), q);
    if (!lcd_test_defining_set(pset, lambda, k)) {
        throw LcdVerificationFailed("defining-set LCD test failed unexpectedly");
    }

    LinearCode code = code_from_defining_set(spec, pset);
    if (code.dim() != n + 1 - d) throw RankMismatch("constacyclic dimension mismatch");
    if (!is_k_galois_lcd(code, k, LcdMethod::both)) {
        throw LcdVerificationFailed("constructed code failed the Gram/hull LCD check");
    }

    DistanceCertificate cert;
    cert.method = DistanceCertificate::Method::bch_singleton;
    cert.d_lower = bch_lower_bound(pset);
    cert.d_upper = code.length() - code.dim() + 1;
    if (cert.d_lower != d || cert.d_upper != d) {
        throw RankMismatch("BCH/Singleton bounds do not meet at d");
    }
    return {std::move(code), cert, std::move(spec), std::move(pset), alpha};
}

ConstacyclicResult family_iv(std::uint64_t p, unsigned e, std::uint64_t l) {
    if (e < 2) throw PreconditionViolated("family iv requires e >= 2");
    if (p < 5 || p % 2 == 0) throw PreconditionViolated("family iv requires an odd prime p >= 5");
    std::uint64_t lmax;
    std::size_t target;
    if (p % 4 == 1) {
        lmax = (p - 5) / 4;
        target = static_cast<std::size_t>(2 * l);
    } else {
        lmax = (p - 3) / 4;
        target = static_cast<std::size_t>(2 * l - 1);
    }
    if (l < 1 || l > lmax) {
        throw PreconditionViolated("family iv requires 1 <= l <= " + u64s(lmax) +
                                   " for p = " + u64s(p));
    }

    FieldPtr field = make_field(p, e);
    const std::uint64_t q = field->order();
    const std::uint64_t n = (p - 1) / 2;
    const FieldElement lambda = neg(field->one());
    ConstacyclicSpec spec = make_constacyclic_spec(field, n, lambda);

    // Consecutive runs force BCH = Singleton; the symmetry -pP = P is the
    // k=1 LCD criterion since (-1)^(1+p^(e-1)) = 1 for odd p. First
    // qualifying run in ascending start order wins.
    for (std::uint64_t h = 0; h + target <= n; ++h) {
        std::vector<std::uint64_t> members;
        members.reserve(target);
        for (std::size_t t = 0; t < target; ++t) members.push_back(1 + 2 * (h + t));
        DefiningSet pset;
        try {
            pset = make_defining_set(2, n, std::move(members), q);
        } catch (const InvalidDefiningSet&) {
            continue;  // not a union of cosets
        }
        if (!lcd_test_defining_set(pset, lambda, 1)) continue;

        LinearCode code = code_from_defining_set(spec, pset);
        if (!is_k_galois_lcd(code, 1, LcdMethod::both)) {
            throw LcdVerificationFailed("defining-set test and Gram/hull check disagree");
        }
        DistanceCertificate cert;
        cert.method = DistanceCertificate::Method::bch_singleton;
        cert.d_lower = bch_lower_bound(pset);
        cert.d_upper = code.length() - code.dim() + 1;
        if (cert.d_lower != cert.d_upper) {
            throw RankMismatch("BCH/Singleton bounds do not meet at d");
        }
        FieldElement alpha = primitive_element(field);
        return {std::move(code), cert, std::move(spec), std::move(pset), std::move(alpha)};
    }
    throw ConstructionNotFound("no symmetric consecutive defining set for p=" + u64s(p) +
                               ", e=" + u64s(e) + ", l=" + u64s(l));
}

}  // namespace eaq
