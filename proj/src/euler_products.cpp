#include "k2ff/euler_products.hpp"

#include <stdexcept>

#include "k2ff/lfunction.hpp"
#include "k2ff/poly.hpp"

namespace k2ff {

std::string BigFloat::str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", digits, x_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

namespace {

mpz_class pow_q(std::uint32_t q, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

// Degree-n factor of P(s): 1 - 1/((q^n+1) q^{ns}).
mpq_class factor_P(FieldSpec spec, int s, int n) {
    mpz_class den = (pow_q(spec.q(), static_cast<unsigned long>(n)) + 1) *
                    pow_q(spec.q(), static_cast<unsigned long>(n) * static_cast<unsigned long>(s));
    mpq_class f(den - 1, den);
    f.canonicalize();
    return f;
}

// Degree-n factor of c(2): 1 - p^{-2} - p^{-5} + p^{-6} with p = q^n.
mpq_class factor_c2(FieldSpec spec, int n) {
    mpz_class p = pow_q(spec.q(), static_cast<unsigned long>(n));
    mpz_class p6 = p * p * p * p * p * p;
    mpq_class f(p6 - p * p * p * p - p + 1, p6);
    f.canonicalize();
    return f;
}

// Tail majorants. With x_n the degree-n factor deficit and I_q(n) factors
// of degree n:
//   1 - prod_{n>N} (1-x_n)^{I_q(n)}  <=  sum_{n>N} I_q(n) x_n,
// and I_q(n) <= q^n. For P(s), x_n <= q^{-n(s+1)}, so the tail is at most
// sum_{n>N} q^{-ns} = 1/(q^{Ns}(q^s - 1)). For c(2), x_n <= 2 q^{-2n}, so
// the tail is at most 2 sum_{n>N} q^{-n} = 2/(q^N (q - 1)).
mpq_class tail_P(FieldSpec spec, int s, int N) {
    mpz_class qs = pow_q(spec.q(), static_cast<unsigned long>(s));
    mpq_class t(1, pow_q(spec.q(), static_cast<unsigned long>(N) * static_cast<unsigned long>(s)) *
                       (qs - 1));
    t.canonicalize();
    return t;
}

mpq_class tail_c2(FieldSpec spec, int N) {
    mpq_class t(2, pow_q(spec.q(), static_cast<unsigned long>(N)) * (spec.q() - 1));
    t.canonicalize();
    return t;
}

template <class Factor, class Tail>
TruncatedProduct truncated_product(FieldSpec spec, int s, double rel_err,
                                   Factor&& factor, Tail&& tail) {
    if (rel_err <= 0) throw std::invalid_argument("euler product: rel_err must be > 0");
    const mpq_class target(rel_err);
    int N = 0;
    while (tail(N) >= target) {
        if (++N > 512) throw std::runtime_error("euler product: truncation degree too large");
    }
    BigFloat value(1ul);
    for (int n = 1; n <= N; ++n)
        value = value * BigFloat(factor(n)).pow(irreducible_count(spec, n));
    return TruncatedProduct{std::move(value), N, tail(N), spec.q(), s};
}

} // namespace

TruncatedProduct euler_P(FieldSpec spec, int s, double rel_err) {
    if (s < 2) throw std::domain_error("euler_P: s must be >= 2");
    return truncated_product(
        spec, s, rel_err, [&](int n) { return factor_P(spec, s, n); },
        [&](int N) { return tail_P(spec, s, N); });
}

TruncatedProduct euler_c2(FieldSpec spec, double rel_err) {
    return truncated_product(
        spec, 0, rel_err, [&](int n) { return factor_c2(spec, n); },
        [&](int N) { return tail_c2(spec, N); });
}

namespace {

template <class Factor>
mpq_class exact_product(FieldSpec spec, int N, Factor&& factor) {
    mpq_class value = 1;
    for (int n = 1; n <= N; ++n) {
        mpz_class count = irreducible_count(spec, n);
        if (!count.fits_ulong_p())
            throw std::domain_error("exact euler product: truncation degree too large");
        mpq_class f = factor(n);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), f.get_num().get_mpz_t(), count.get_ui());
        mpz_pow_ui(den.get_mpz_t(), f.get_den().get_mpz_t(), count.get_ui());
        value *= mpq_class(num, den);
        value.canonicalize();
    }
    return value;
}

} // namespace

mpq_class euler_P_exact(FieldSpec spec, int s, int N) {
    return exact_product(spec, N, [&](int n) { return factor_P(spec, s, n); });
}

mpq_class euler_c2_exact(FieldSpec spec, int N) {
    return exact_product(spec, N, [&](int n) { return factor_c2(spec, n); });
}

mpq_class euler_P_tail(FieldSpec spec, int s, int N) { return tail_P(spec, s, N); }
mpq_class euler_c2_tail(FieldSpec spec, int N) { return tail_c2(spec, N); }

BigFloat main_term_mean_k2(FieldSpec spec, int g, const TruncatedProduct& P4) {
    if (g < 0) throw std::invalid_argument("main term: g < 0");
    // q^{(3/2)(2g+1)} q^{-3/2} = q^{3g}
    return BigFloat(pow_q(spec.q(), 3ul * static_cast<unsigned long>(g))) *
           BigFloat(zeta_A(spec, 4)) * P4.value;
}

BigFloat main_term_all_squarefree(FieldSpec spec, int M, const TruncatedProduct& c2) {
    if (M < 1 || M % 2 == 0) throw std::domain_error("main term: M must be odd >= 1");
    // q^{-3/2} q^{3M/2} = q^{3(M-1)/2}
    return BigFloat(pow_q(spec.q(), 3ul * static_cast<unsigned long>(M - 1) / 2)) *
           BigFloat(zeta_A(spec, 2)) * BigFloat(zeta_A(spec, 4)) * c2.value;
}

} // namespace k2ff
