#include "k2ff/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace k2ff {

Poly::Poly(FieldSpec spec, std::vector<std::uint32_t> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    for (auto& c : coeffs_) c %= spec_.q();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldSpec spec, std::uint32_t c) {
    return Poly(spec, {c});
}

Poly Poly::derivative() const {
    std::vector<std::uint32_t> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        std::uint64_t c = static_cast<std::uint64_t>(coeffs_[i]) * (i % q());
        d.push_back(static_cast<std::uint32_t>(c % q()));
    }
    return Poly(spec_, std::move(d));
}

FieldElement Poly::eval(const FieldElement& x) const {
    if (x.spec() != spec_) throw std::invalid_argument("eval: spec mismatch");
    FieldElement acc(0, spec_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + FieldElement(*it, spec_);
    return acc;
}

Poly Poly::monic_normalized() const {
    if (is_zero() || is_monic()) return *this;
    FieldElement inv = inverse(FieldElement(leading(), spec_));
    return inv * *this;
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

Poly operator+(const Poly& f, const Poly& g) {
    if (f.spec() != g.spec()) throw std::invalid_argument("poly spec mismatch");
    std::vector<std::uint32_t> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (f.coeff(i) + g.coeff(i)) % f.q();
    return Poly(f.spec(), std::move(c));
}

Poly operator-(const Poly& f, const Poly& g) {
    if (f.spec() != g.spec()) throw std::invalid_argument("poly spec mismatch");
    std::vector<std::uint32_t> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (f.coeff(i) + f.q() - g.coeff(i)) % f.q();
    return Poly(f.spec(), std::move(c));
}

Poly operator*(const Poly& f, const Poly& g) {
    if (f.spec() != g.spec()) throw std::invalid_argument("poly spec mismatch");
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.spec());
    const std::uint64_t q = f.q();
    std::vector<std::uint64_t> acc(f.coeffs().size() + g.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(f.coeff(i)) * g.coeff(j)) % q;
    std::vector<std::uint32_t> c(acc.begin(), acc.end());
    return Poly(f.spec(), std::move(c));
}

Poly operator*(const FieldElement& c, const Poly& f) {
    if (c.spec() != f.spec()) throw std::invalid_argument("poly spec mismatch");
    std::vector<std::uint32_t> out(f.coeffs().size());
    const std::uint64_t q = f.q();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c.value()) * f.coeff(i) % q);
    return Poly(f.spec(), std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (f.spec() != g.spec()) throw std::invalid_argument("poly spec mismatch");
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    const std::uint32_t q = f.q();
    std::vector<std::uint32_t> rem(f.coeffs());
    const int dg = g.degree();
    FieldElement lead_inv = inverse(FieldElement(g.leading(), g.spec()));
    std::vector<std::uint32_t> quot(
        f.degree() >= dg ? static_cast<std::size_t>(f.degree() - dg + 1) : 0, 0);
    for (int i = f.degree(); i >= dg; --i) {
        if (rem[static_cast<std::size_t>(i)] == 0) continue;
        std::uint64_t factor =
            static_cast<std::uint64_t>(rem[static_cast<std::size_t>(i)]) * lead_inv.value() % q;
        quot[static_cast<std::size_t>(i - dg)] = static_cast<std::uint32_t>(factor);
        for (int j = 0; j <= dg; ++j) {
            std::uint64_t sub = factor * g.coeff(static_cast<std::size_t>(j)) % q;
            std::uint32_t& r = rem[static_cast<std::size_t>(i - dg + j)];
            r = static_cast<std::uint32_t>((r + q - sub) % q);
        }
    }
    return {Poly(f.spec(), std::move(quot)), Poly(f.spec(), std::move(rem))};
}

Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }
Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }

Poly gcd(Poly f, Poly g) {
    while (!g.is_zero()) {
        Poly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic_normalized();
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) {
    if (m.is_constant()) throw std::domain_error("powmod: constant modulus");
    if (e < 0) throw std::domain_error("powmod: negative exponent");
    Poly result = Poly::one(base.spec());
    Poly b = base % m;
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) result = result * b % m;
        b = b * b % m;
        n >>= 1;
    }
    return result;
}

mpz_class poly_norm(const Poly& f) {
    if (f.is_zero()) return 0;
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), f.q(), static_cast<unsigned long>(f.degree()));
    return r;
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("is_squarefree: zero polynomial");
    if (f.is_constant()) return true;
    Poly d = f.derivative();
    // In characteristic p, f' = 0 with deg f >= 1 means f is a p-th power.
    if (d.is_zero()) return false;
    return gcd(f, d).is_constant();
}

// --- Irreducibles ------------------------------------------------------------

namespace {

// Per-q cache of monic irreducibles grouped by degree; grows on demand.
struct IrreducibleCache {
    std::mutex mu;
    std::vector<std::vector<Poly>> by_degree; // by_degree[d-1]: degree d
};

IrreducibleCache& cache_for(std::uint32_t q) {
    static std::mutex table_mu;
    static std::map<std::uint32_t, IrreducibleCache> table;
    std::lock_guard lock(table_mu);
    return table[q];
}

void extend_cache(FieldSpec spec, IrreducibleCache& cache, int max_degree) {
    for (int d = static_cast<int>(cache.by_degree.size()) + 1; d <= max_degree; ++d) {
        std::vector<Poly> found;
        for_each_monic(spec, d, [&](const Poly& f) {
            for (int a = 1; 2 * a <= d; ++a)
                for (const Poly& p : cache.by_degree[static_cast<std::size_t>(a - 1)])
                    if ((f % p).is_zero()) return;
            found.push_back(f);
        });
        cache.by_degree.push_back(std::move(found));
    }
}

} // namespace

const std::vector<std::vector<Poly>>& irreducibles_up_to(FieldSpec spec, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("irreducibles_up_to: degree < 1");
    IrreducibleCache& cache = cache_for(spec.q());
    std::lock_guard lock(cache.mu);
    extend_cache(spec, cache, max_degree);
    return cache.by_degree;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.is_constant())
        throw std::domain_error("is_irreducible: constant or zero input");
    if (f.degree() == 1) return true;
    Poly m = f.monic_normalized();
    const auto& irr = irreducibles_up_to(f.spec(), f.degree() / 2);
    for (int a = 1; 2 * a <= f.degree(); ++a)
        for (const Poly& p : irr[static_cast<std::size_t>(a - 1)])
            if ((m % p).is_zero()) return false;
    return true;
}

Poly Factorization::expand() const {
    Poly r = Poly::constant(unit.spec(), unit.value());
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

Factorization factor(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    Factorization result{FieldElement(f.leading(), f.spec()), {}};
    Poly rem = f.monic_normalized();
    if (rem.is_constant()) return result;
    const auto& irr = irreducibles_up_to(f.spec(), std::max(1, rem.degree() / 2));
    for (std::size_t d = 0; d < irr.size() && rem.degree() >= 2 * static_cast<int>(d + 1); ++d) {
        for (const Poly& p : irr[d]) {
            if (rem.degree() < 2 * static_cast<int>(d + 1)) break;
            int e = 0;
            while (true) {
                auto [quo, r] = divmod(rem, p);
                if (!r.is_zero()) break;
                rem = quo;
                ++e;
            }
            if (e > 0) result.factors.emplace_back(p, e);
        }
    }
    if (!rem.is_constant()) result.factors.emplace_back(rem, 1);
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

int moebius(const Poly& f) {
    if (f.is_zero() || !f.is_monic())
        throw std::domain_error("moebius: input must be monic nonzero");
    if (f.is_one()) return 1;
    if (!is_squarefree(f)) return 0;
    return factor(f).factors.size() % 2 == 0 ? 1 : -1;
}

mpz_class irreducible_count(FieldSpec spec, int n) {
    if (n < 1) throw std::invalid_argument("irreducible_count: n < 1");
    // Necklace formula: I_q(n) = (1/n) sum_{d|n} mu(d) q^{n/d}.
    auto mu_int = [](int m) {
        int count = 0;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                ++count;
            }
        }
        if (m > 1) ++count;
        return count % 2 == 0 ? 1 : -1;
    };
    mpz_class sum = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = mu_int(d);
        if (mu == 0) continue;
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), spec.q(), static_cast<unsigned long>(n / d));
        sum += mu * term;
    }
    return sum / n;
}

// --- Enumeration -------------------------------------------------------------

std::uint64_t monic_count(FieldSpec spec, int n) {
    if (n < 0) throw std::invalid_argument("monic_count: n < 0");
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i) c *= spec.q();
    return c;
}

Poly monic_by_index(FieldSpec spec, int n, std::uint64_t index) {
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        coeffs[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % spec.q());
        index /= spec.q();
    }
    coeffs[static_cast<std::size_t>(n)] = 1;
    return Poly(spec, std::move(coeffs));
}

std::uint64_t monic_index(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("monic_index: non-monic input");
    std::uint64_t idx = 0;
    for (int i = f.degree() - 1; i >= 0; --i)
        idx = idx * f.q() + f.coeff(static_cast<std::size_t>(i));
    return idx;
}

void for_each_monic(FieldSpec spec, int n,
                    const std::function<void(const Poly&)>& fn) {
    const std::uint64_t count = monic_count(spec, n);
    for (std::uint64_t i = 0; i < count; ++i) fn(monic_by_index(spec, n, i));
}

void enumerate_H(FieldSpec spec, int g,
                 const std::function<void(const Poly&)>& fn) {
    if (g < 0) throw std::invalid_argument("enumerate_H: g < 0");
    for_each_monic(spec, 2 * g + 1, [&](const Poly& f) {
        if (is_squarefree(f)) fn(f);
    });
}

} // namespace k2ff
