#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "k2ff/euler_products.hpp"
#include "k2ff/lfunction.hpp"

using namespace k2ff;

namespace {
FieldSpec f3(3);

mpq_class pow_q(const mpq_class& base, int e) {
    mpq_class r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}
} // namespace

TEST_CASE("exact truncations at small N") {
    CHECK(euler_P_exact(f3, 4, 0) == 1);
    CHECK(euler_c2_exact(f3, 0) == 1);

    // N=1, q=3, s=4: three linear irreducibles, factor 1 - 1/(4*81) = 323/324
    CHECK(euler_P_exact(f3, 4, 1) == pow_q(mpq_class(323, 324), 3));

    // N=1, q=3: factor 1 - 1/9 - 1/243 + 1/729 = 646/729
    CHECK(euler_c2_exact(f3, 1) == pow_q(mpq_class(646, 729), 3));
}

TEST_CASE("per-degree factor positivity for c(2)") {
    // 1 - x^2 - x^5 + x^6 with x = q^{-n}
    for (std::uint32_t q : {3u, 5u})
        for (int n = 1; n <= 12; ++n) {
            mpq_class x(1, 1);
            for (int i = 0; i < n; ++i) x /= q;
            mpq_class factor = 1 - pow_q(x, 2) - pow_q(x, 5) + pow_q(x, 6);
            CHECK(factor > 0);
            CHECK(factor <= 1);
        }
}

TEST_CASE("truncation monotonicity and majorant bracketing") {
    // exact rationals only at modest N: the degree-n block carries exponent
    // I_q(n) ~ q^n/n, so the numbers grow exponentially in N
    for (std::uint32_t q : {3u, 5u}) {
        FieldSpec spec(q);
        const int mono_max = q == 3 ? 10 : 6;
        for (int N = 0; N < mono_max; ++N) {
            CHECK(euler_P_exact(spec, 4, N + 1) <= euler_P_exact(spec, 4, N));
            CHECK(euler_c2_exact(spec, N + 1) <= euler_c2_exact(spec, N));
        }
        const int bracket_max = q == 3 ? 6 : 3;
        for (int N = 1; N <= bracket_max; ++N) {
            mpq_class vP = euler_P_exact(spec, 4, N);
            mpq_class dP = vP - euler_P_exact(spec, 4, N + 4);
            CHECK(dP / vP < euler_P_tail(spec, 4, N));

            mpq_class vc = euler_c2_exact(spec, N);
            mpq_class dc = vc - euler_c2_exact(spec, N + 4);
            CHECK(dc / vc < euler_c2_tail(spec, N));
        }
    }
}

TEST_CASE("euler_P / euler_c2 agree with the exact truncations") {
    for (std::uint32_t q : {3u, 5u}) {
        FieldSpec spec(q);
        for (double rel : {1e-4, 1e-8}) {
            TruncatedProduct P4 = euler_P(spec, 4, rel);
            CHECK(P4.tail_bound < mpq_class(rel));
            CHECK(P4.tail_bound == euler_P_tail(spec, 4, P4.truncation_degree));
            BigFloat exact(euler_P_exact(spec, 4, P4.truncation_degree));
            CHECK((P4.value - exact).abs() < BigFloat(1e-40));
        }
        TruncatedProduct c2 = euler_c2(spec, 1e-4);
        CHECK(c2.tail_bound < mpq_class(1e-4));
        CHECK(c2.tail_bound == euler_c2_tail(spec, c2.truncation_degree));
        REQUIRE(c2.truncation_degree <= 10);
        BigFloat exact_c2(euler_c2_exact(spec, c2.truncation_degree));
        CHECK((c2.value - exact_c2).abs() < BigFloat(1e-40));
        // coarse sanity band
        CHECK(euler_P(spec, 2, 1e-10).value.to_double() > 0.5);
        CHECK(euler_P(spec, 2, 1e-10).value.to_double() < 1.0);
        CHECK(euler_c2(spec, 1e-10).value.to_double() > 0.5);
        CHECK(euler_c2(spec, 1e-10).value.to_double() < 1.0);
    }
}

TEST_CASE("successive truncations differ by less than the tail bound") {
    TruncatedProduct a = euler_P(f3, 4, 1e-12);
    mpq_class vN = euler_P_exact(f3, 4, a.truncation_degree);
    mpq_class vN1 = euler_P_exact(f3, 4, a.truncation_degree + 1);
    CHECK((vN - vN1) / vN < a.tail_bound);
}

TEST_CASE("c(2) factor splits as (1-u^2)(1 - u^5/(1+u))") {
    // consequence: c(2) * zeta_A(2) = P(4); the two mean-value constants
    // coincide. Verified here per degree in exact arithmetic.
    for (std::uint32_t q : {3u, 5u})
        for (int n = 1; n <= 10; ++n) {
            mpq_class u(1, 1);
            for (int i = 0; i < n; ++i) u /= q;
            mpq_class lhs = 1 - pow_q(u, 2) - pow_q(u, 5) + pow_q(u, 6);
            mpq_class rhs = (1 - pow_q(u, 2)) * (1 - pow_q(u, 5) / (1 + u));
            CHECK(lhs == rhs);
            // and (1 - u^5/(1+u)) is the P(4) factor 1 - 1/((|P|+1)|P|^4)
            mpq_class p4_factor = 1 - pow_q(u, 4) / (1 / u + 1);
            CHECK(rhs / (1 - pow_q(u, 2)) == p4_factor);
        }
}

TEST_CASE("main terms") {
    TruncatedProduct P4 = euler_P(f3, 4, 1e-12);
    TruncatedProduct c2 = euler_c2(f3, 1e-12);

    // q=3, g=1: 27 * (27/26) * P(4)
    BigFloat mean_k2 = main_term_mean_k2(f3, 1, P4);
    BigFloat expected = BigFloat(mpq_class(27 * 27, 26)) * P4.value;
    CHECK((mean_k2 - expected).abs() < BigFloat(1e-60));

    // q=3, M=3: (3/2) * (27/26) * c(2) * 27
    BigFloat rosen = main_term_all_squarefree(f3, 3, c2);
    BigFloat expected_rosen =
        BigFloat(mpq_class(3, 2) * mpq_class(27, 26) * 27) * c2.value;
    CHECK((rosen - expected_rosen).abs() < BigFloat(1e-60));

    // M=1 sanity at q=5: zeta_A(2) zeta_A(4) c(2) = (5/4)(125/124) c(2)
    FieldSpec f5(5);
    TruncatedProduct c2_5 = euler_c2(f5, 1e-10);
    BigFloat m1 = main_term_all_squarefree(f5, 1, c2_5);
    BigFloat e1 = BigFloat(mpq_class(5, 4) * mpq_class(125, 124)) * c2_5.value;
    CHECK((m1 - e1).abs() < BigFloat(1e-60));

    CHECK_THROWS_AS(main_term_all_squarefree(f3, 2, c2), std::domain_error);
}

TEST_CASE("BigFloat fixed-point rendering") {
    CHECK(BigFloat(mpq_class(1, 4)).str(3) == "0.250");
    CHECK(BigFloat(2.0).str(2) == "2.00");
}
