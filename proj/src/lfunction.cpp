#include "k2ff/lfunction.hpp"

#include <cmath>
#include <cstdlib>

namespace k2ff {

mpq_class zeta_A(FieldSpec spec, int s) {
    if (s <= 1) throw std::domain_error("zeta_A: s must be >= 2");
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), spec.q(), static_cast<unsigned long>(s - 1));
    mpq_class r(p, p - 1);
    r.canonicalize();
    return r;
}

namespace {

void check_discriminant(const Poly& D) {
    if (!D.is_monic() || D.degree() < 1 || D.degree() % 2 == 0)
        throw std::domain_error("L-polynomial: D must be monic of odd degree");
    if (!is_squarefree(D)) throw std::domain_error("L-polynomial: D must be squarefree");
}

LPolynomial from_coefficient_sums(const Poly& D, const std::vector<long long>& sums) {
    const int g = (D.degree() - 1) / 2;
    // Sanity window: the series truncates at 2g.
    for (int n = 2 * g + 1; n <= 2 * g + 2; ++n)
        if (sums[static_cast<std::size_t>(n)] != 0)
            throw std::logic_error("L-polynomial: coefficient past cutoff is nonzero");
    LPolynomial L{D, g, {}};
    for (int n = 0; n <= 2 * g; ++n)
        L.coeffs.emplace_back(static_cast<long>(sums[static_cast<std::size_t>(n)]));
    return L;
}

} // namespace

LPolynomial l_polynomial(const Poly& D, const CharTable& table) {
    check_discriminant(D);
    const int g = (D.degree() - 1) / 2;
    if (table.max_degree() < 2 * g + 2)
        throw std::invalid_argument("l_polynomial: table too small");
    const MonicSieve& sieve = table.sieve();
    std::vector<long long> sums(static_cast<std::size_t>(2 * g + 3), 0);
    for (int n = 0; n <= 2 * g + 2; ++n) {
        const std::size_t b = sieve.first_index_of_degree(n);
        const std::size_t e = sieve.first_index_of_degree(n + 1);
        long long s = 0;
        for (std::size_t i = b; i < e; ++i) s += table.at(i);
        sums[static_cast<std::size_t>(n)] = s;
    }
    return from_coefficient_sums(D, sums);
}

LPolynomial l_polynomial(const Poly& D) {
    check_discriminant(D);
    const int g = (D.degree() - 1) / 2;
    return l_polynomial(D, CharTable(D, 2 * g + 2));
}

LPolynomial l_polynomial_direct(const Poly& D) {
    check_discriminant(D);
    const int g = (D.degree() - 1) / 2;
    std::vector<long long> sums(static_cast<std::size_t>(2 * g + 3), 0);
    for (int n = 0; n <= 2 * g + 2; ++n) {
        long long s = 0;
        for_each_monic(D.spec(), n, [&](const Poly& f) { s += kronecker(D, f); });
        sums[static_cast<std::size_t>(n)] = s;
    }
    return from_coefficient_sums(D, sums);
}

mpq_class l_value(const LPolynomial& L, int s) {
    if (s < 1) throw std::domain_error("l_value: s must be >= 1");
    mpq_class total = 0;
    for (std::size_t n = 0; n < L.coeffs.size(); ++n) {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), L.D.q(),
                      static_cast<unsigned long>(s) * static_cast<unsigned long>(n));
        mpq_class term(L.coeffs[n], den);
        term.canonicalize();
        total += term;
    }
    return total;
}

mpz_class k2_order(const LPolynomial& L) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), L.D.q(), static_cast<unsigned long>(3 * L.g));
    mpq_class order = mpq_class(scale) * l_value(L, 2);
    order.canonicalize();
    if (order.get_den() != 1 || order.get_num() <= 0)
        throw std::logic_error("k2_order: q^{3g} L(2,chi_D) is not a positive integer");
    return order.get_num();
}

mpz_class k2_order(const Poly& D) { return k2_order(l_polynomial(D)); }

bool fe_check(const LPolynomial& L) {
    mpz_class qz(static_cast<unsigned long>(L.D.q()));
    for (int n = 0; n <= L.g; ++n) {
        mpz_class factor;
        mpz_pow_ui(factor.get_mpz_t(), qz.get_mpz_t(),
                   static_cast<unsigned long>(L.g - n));
        if (L.coeffs[static_cast<std::size_t>(2 * L.g - n)] !=
            factor * L.coeffs[static_cast<std::size_t>(n)])
            return false;
    }
    return true;
}

std::vector<std::complex<double>> l_roots(const LPolynomial& L) {
    std::vector<std::complex<double>> a;
    for (const auto& c : L.coeffs) a.emplace_back(c.get_d(), 0.0);
    while (!a.empty() && std::abs(a.back()) == 0.0) a.pop_back();
    if (a.size() <= 1) return {};
    const std::size_t deg = a.size() - 1;
    for (auto& c : a) c /= a.back();

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
        return acc;
    };

    // Durand-Kerner iteration.
    std::vector<std::complex<double>> roots(deg);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w(1.0, 0.0);
    for (auto& r : roots) {
        w *= seed;
        r = w;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double max_step = 0;
        for (std::size_t i = 0; i < deg; ++i) {
            std::complex<double> denom = 1;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            std::complex<double> step = eval(roots[i]) / denom;
            roots[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-14) return roots;
    }
    throw std::runtime_error("l_roots: root iteration did not converge");
}

bool rh_check(const LPolynomial& L, double tol) {
    const double target = 1.0 / std::sqrt(static_cast<double>(L.D.q()));
    for (const auto& u : l_roots(L))
        if (std::abs(std::abs(u) - target) > tol) return false;
    return true;
}

} // namespace k2ff
