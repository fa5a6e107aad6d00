#include "k2ff/quad_char.hpp"

#include <map>
#include <mutex>

namespace k2ff {

namespace {

void check_bottom(const Poly& top, const Poly& bottom) {
    if (top.spec() != bottom.spec())
        throw std::invalid_argument("kronecker: spec mismatch");
    if (bottom.is_zero()) throw std::domain_error("kronecker: zero bottom");
    if (!bottom.is_monic()) throw std::domain_error("kronecker: non-monic bottom");
}

} // namespace

int scalar_char(const FieldElement& c, const Poly& f) {
    if (!f.is_monic()) throw std::domain_error("scalar_char: non-monic modulus");
    if (f.degree() == 0) return 1;
    int l = legendre_const(c);
    if (l == 0) return 0;
    return f.degree() % 2 == 0 ? 1 : l;
}

int kronecker(const Poly& top, const Poly& bottom) {
    check_bottom(top, bottom);
    const FieldSpec spec = top.spec();
    const bool q3mod4 = ((spec.q() - 1) / 2) % 2 == 1;
    int sign = 1;
    Poly t = top, b = bottom;
    while (true) {
        if (b.is_one()) return sign;
        t = t % b;
        if (t.is_zero()) return 0;
        // Peel the leading coefficient: (c/b) = legendre(c)^{deg b}.
        if (b.degree() % 2 == 1)
            sign *= legendre_const(FieldElement(t.leading(), spec));
        t = t.monic_normalized();
        if (t.is_one()) return sign;
        // Reciprocity swap; both arguments monic here.
        if (q3mod4 && t.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
        std::swap(t, b);
    }
}

int kronecker_oracle(const Poly& top, const Poly& bottom) {
    check_bottom(top, bottom);
    int result = 1;
    for (const auto& [p, e] : factor(bottom).factors) {
        Poly r = top % p;
        if (r.is_zero()) return 0;
        mpz_class exp = (poly_norm(p) - 1) / 2;
        Poly s = powmod(r, exp, p);
        int sym;
        if (s.is_one()) sym = 1;
        else if (s.is_constant() && s.coeff(0) == top.q() - 1) sym = -1;
        else throw std::logic_error("kronecker_oracle: residue power is not +-1");
        if (e % 2 == 1) result *= sym;
    }
    return result;
}

// --- MonicSieve ---------------------------------------------------------------

MonicSieve::MonicSieve(FieldSpec spec, int max_degree)
    : spec_(spec), max_degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("MonicSieve: negative degree");
    offset_.resize(static_cast<std::size_t>(max_degree) + 2);
    offset_[0] = 0;
    for (int n = 0; n <= max_degree; ++n)
        offset_[static_cast<std::size_t>(n) + 1] =
            offset_[static_cast<std::size_t>(n)] + monic_count(spec, n);
    const std::uint64_t total = offset_.back();
    constexpr std::uint32_t kUnset = 0xffffffffu;
    spf_.assign(total, kUnset);
    quot_.assign(total, 0);
    spf_[0] = 0; // f = 1
    for (int n = 1; n <= max_degree; ++n) {
        const std::uint64_t begin = offset_[static_cast<std::size_t>(n)];
        const std::uint64_t end = offset_[static_cast<std::size_t>(n) + 1];
        for (std::uint64_t i = begin; i < end; ++i) {
            if (spf_[i] != kUnset) continue;
            // Every composite of degree n has an irreducible factor of a
            // strictly smaller degree and was marked in an earlier pass.
            spf_[i] = static_cast<std::uint32_t>(i);
            quot_[i] = 0;
            const Poly p = poly_at(i);
            for (int m = 1; m + n <= max_degree; ++m) {
                const std::uint64_t mb = offset_[static_cast<std::size_t>(m)];
                const std::uint64_t me = offset_[static_cast<std::size_t>(m) + 1];
                for (std::uint64_t j = mb; j < me; ++j) {
                    const std::size_t prod = index_of(p * poly_at(j));
                    if (spf_[prod] == kUnset) {
                        spf_[prod] = static_cast<std::uint32_t>(i);
                        quot_[prod] = static_cast<std::uint32_t>(j);
                    }
                }
            }
            // p * (degree-0 cofactor) is p itself; p^2 etc. handled above.
        }
    }
}

std::shared_ptr<const MonicSieve> MonicSieve::shared(FieldSpec spec, int max_degree) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::shared_ptr<const MonicSieve>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(spec.q());
    if (it != cache.end() && it->second->max_degree() >= max_degree) return it->second;
    auto sieve = std::make_shared<const MonicSieve>(spec, max_degree);
    cache[spec.q()] = sieve;
    return sieve;
}

std::size_t MonicSieve::index_of(const Poly& f) const {
    if (!f.is_monic() || f.degree() > max_degree_)
        throw std::invalid_argument("MonicSieve::index_of: out of range");
    return static_cast<std::size_t>(offset_[static_cast<std::size_t>(f.degree())] +
                                    monic_index(f));
}

int MonicSieve::degree_at(std::size_t idx) const {
    int n = 0;
    while (offset_[static_cast<std::size_t>(n) + 1] <= idx) ++n;
    return n;
}

Poly MonicSieve::poly_at(std::size_t idx) const {
    const int n = degree_at(idx);
    return monic_by_index(spec_, n, idx - offset_[static_cast<std::size_t>(n)]);
}

std::vector<std::pair<std::size_t, int>> MonicSieve::factor_indices(std::size_t idx) const {
    std::vector<std::pair<std::size_t, int>> out;
    while (idx != 0) {
        const std::size_t p = spf_[idx];
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.emplace_back(p, 1);
        idx = quot_[idx];
    }
    return out;
}

// --- CharTable ----------------------------------------------------------------

namespace {

std::vector<std::int8_t> build_char_values(const Poly& D, const MonicSieve& sieve) {
    if (!D.is_monic()) throw std::domain_error("CharTable: D must be monic");
    if (!is_squarefree(D)) throw std::domain_error("CharTable: D must be squarefree");
    return sieve.multiplicative_table(
        [&](const Poly& p) { return kronecker(D, p); });
}

} // namespace

CharTable::CharTable(Poly D, int max_degree)
    : D_(std::move(D)), sieve_(MonicSieve::shared(D_.spec(), max_degree)),
      vals_(build_char_values(D_, *sieve_)) {}

CharTable::CharTable(Poly D, std::shared_ptr<const MonicSieve> sieve)
    : D_(std::move(D)), sieve_(std::move(sieve)),
      vals_(build_char_values(D_, *sieve_)) {}

} // namespace k2ff
