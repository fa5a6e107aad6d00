#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "k2ff/poly.hpp"

using namespace k2ff;

namespace {
FieldSpec f3(3);

Poly P(const char* text, FieldSpec spec = f3) { return Poly::parse(text, spec); }
} // namespace

TEST_CASE("parsing: expression and comma forms") {
    Poly f = P("T^3+2*T+2");
    CHECK(f.coeffs() == std::vector<std::uint32_t>{2, 2, 0, 1});
    CHECK(P("0").is_zero());
    CHECK(P("0").degree() == -1);
    CHECK(P("1,2,0,1") == P("T^3+2*T+1"));
    CHECK(P("T - 1") == P("T+2"));          // coefficients reduced mod q
    CHECK(P("4*T^2", FieldSpec(3)) == P("T^2"));
    CHECK_THROWS_AS(P(""), std::invalid_argument);
    CHECK_THROWS_AS(P("T^"), std::invalid_argument);
    CHECK_THROWS_AS(P("T+*2"), std::invalid_argument);
    CHECK_THROWS_AS(P("x+1"), std::invalid_argument);
}

TEST_CASE("format round-trips through parse") {
    for (int n = 0; n <= 4; ++n)
        for_each_monic(f3, n, [&](const Poly& f) {
            CHECK(Poly::parse(f.format(), f3) == f);
        });
    CHECK(Poly::zero(f3).format() == "0");
}

TEST_CASE("ring arithmetic spot checks") {
    // (T+1)(T+2) = T^2+3T+2 = T^2+2 over F_3
    CHECK(P("T+1") * P("T+2") == P("T^2+2"));
    CHECK(gcd(P("2*T^2+2*T"), Poly::zero(f3)) == P("T^2+T")); // monic-normalized
    CHECK(P("T^3+1").derivative().is_zero());                 // 3T^2 = 0
    CHECK(P("T^2+T").eval(FieldElement(2, f3)).value() == 0); // 4+2 = 6 = 0
}

TEST_CASE("divmod identity, exhaustive at q=3 up to degree 5") {
    for (int df = 0; df <= 5; ++df)
        for_each_monic(f3, df, [&](const Poly& f) {
            for (int dg = 1; dg <= 3; ++dg)
                for_each_monic(f3, dg, [&](const Poly& g) {
                    auto [quo, rem] = divmod(f, g);
                    CHECK(quo * g + rem == f);
                    CHECK(rem.degree() < g.degree());
                });
        });
    CHECK_THROWS_AS(divmod(P("T"), Poly::zero(f3)), std::domain_error);
}

TEST_CASE("divmod identity for random inputs up to degree 12, q=7") {
    FieldSpec f7(7);
    std::srand(20260823);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint32_t> fc(13), gc(7);
        for (auto& c : fc) c = std::rand() % 7;
        for (auto& c : gc) c = std::rand() % 7;
        Poly f(f7, fc), g(f7, gc);
        if (g.is_zero()) continue;
        auto [quo, rem] = divmod(f, g);
        CHECK(quo * g + rem == f);
        CHECK(rem.degree() < g.degree());
    }
}

TEST_CASE("is_squarefree including the characteristic-p pitfall") {
    CHECK_FALSE(is_squarefree(P("T^2")));
    CHECK(is_squarefree(P("T^3+2*T"))); // T(T+1)(T+2)
    CHECK_FALSE(is_squarefree(P("T^3+1"))); // (T+1)^3, derivative vanishes
    CHECK(is_squarefree(P("1")));
    CHECK_THROWS_AS(is_squarefree(Poly::zero(f3)), std::domain_error);

    // oracle: factorization multiplicities
    for (int n = 1; n <= 5; ++n)
        for_each_monic(f3, n, [&](const Poly& f) {
            bool by_factor = true;
            for (const auto& [p, e] : factor(f).factors)
                if (e > 1) by_factor = false;
            CHECK(is_squarefree(f) == by_factor);
        });
}

TEST_CASE("factor: spot values and exhaustive round-trip") {
    Factorization fac = factor(P("2*T^2+2*T"));
    CHECK(fac.unit.value() == 2);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == P("T"));
    CHECK(fac.factors[1].first == P("T+1"));

    Factorization irr = factor(P("T^2+1"));
    CHECK(irr.factors.size() == 1);
    CHECK(irr.factors[0] == std::pair(P("T^2+1"), 1));

    for (int n = 1; n <= 5; ++n)
        for_each_monic(f3, n, [&](const Poly& f) {
            Factorization fc = factor(f);
            CHECK(fc.expand() == f);
            for (const auto& [p, e] : fc.factors) {
                CHECK(p.is_monic());
                CHECK(is_irreducible(p));
                CHECK(e >= 1);
            }
        });
}

TEST_CASE("is_irreducible spot values") {
    CHECK(is_irreducible(P("T")));
    CHECK(is_irreducible(P("T^2+1")));
    CHECK_FALSE(is_irreducible(P("T^2+2"))); // (T+1)(T+2)
    CHECK_THROWS_AS(is_irreducible(P("1")), std::domain_error);
}

TEST_CASE("moebius") {
    CHECK(moebius(P("1")) == 1);
    CHECK(moebius(P("T^2+T")) == 1); // T(T+1)
    CHECK(moebius(P("T")) == -1);
    CHECK(moebius(P("T^2")) == 0);
    CHECK_THROWS_AS(moebius(P("2*T")), std::domain_error);
}

TEST_CASE("irreducible_count matches brute force and the Gauss identity") {
    CHECK(irreducible_count(f3, 1) == 3);
    CHECK(irreducible_count(f3, 2) == 3);
    CHECK(irreducible_count(FieldSpec(5), 3) == 40);

    for (std::uint32_t q : {3u, 5u}) {
        FieldSpec spec(q);
        int max_brute = q == 3 ? 5 : 3;
        for (int n = 1; n <= max_brute; ++n) {
            mpz_class brute = 0;
            for_each_monic(spec, n, [&](const Poly& f) {
                if (is_irreducible(f)) ++brute;
            });
            CHECK(irreducible_count(spec, n) == brute);
        }
        // sum over d | n of d * I_q(d) = q^n
        for (int n = 1; n <= 8; ++n) {
            mpz_class total = 0, qn;
            for (int d = 1; d <= n; ++d)
                if (n % d == 0) total += d * irreducible_count(spec, d);
            mpz_ui_pow_ui(qn.get_mpz_t(), q, static_cast<unsigned>(n));
            CHECK(total == qn);
        }
    }
}

TEST_CASE("monic enumeration order and counts") {
    std::vector<Poly> deg1;
    for_each_monic(f3, 1, [&](const Poly& f) { deg1.push_back(f); });
    CHECK(deg1 == std::vector<Poly>{P("T"), P("T+1"), P("T+2")});

    std::uint64_t n2 = 0;
    for_each_monic(f3, 2, [&](const Poly&) { ++n2; });
    CHECK(n2 == 9);
    CHECK(monic_count(f3, 2) == 9);

    // degree 0: exactly {1}
    std::vector<Poly> deg0;
    for_each_monic(f3, 0, [&](const Poly& f) { deg0.push_back(f); });
    CHECK(deg0 == std::vector<Poly>{Poly::one(f3)});

    // index round trip
    for (int n = 0; n <= 4; ++n)
        for (std::uint64_t i = 0; i < monic_count(f3, n); ++i) {
            Poly f = monic_by_index(f3, n, i);
            CHECK(f.is_monic());
            CHECK(f.degree() == n);
            CHECK(monic_index(f) == i);
        }
}

TEST_CASE("enumerate_H counts and membership") {
    std::vector<Poly> h0;
    enumerate_H(f3, 0, [&](const Poly& d) { h0.push_back(d); });
    CHECK(h0 == std::vector<Poly>{P("T"), P("T+1"), P("T+2")});

    std::uint64_t h1 = 0;
    enumerate_H(f3, 1, [&](const Poly& d) {
        CHECK(d.is_monic());
        CHECK(d.degree() == 3);
        CHECK(is_squarefree(d));
        ++h1;
    });
    CHECK(h1 == 18); // 27 - 9

    std::uint64_t h5 = 0;
    enumerate_H(FieldSpec(5), 1, [&](const Poly&) { ++h5; });
    CHECK(h5 == 100); // 125 - 25
}

TEST_CASE("squarefree counts and sieve identity") {
    for (std::uint32_t q : {3u, 5u}) {
        FieldSpec spec(q);
        for (int n = 2; n <= (q == 3 ? 6 : 4); ++n) {
            std::uint64_t count = 0;
            for_each_monic(spec, n, [&](const Poly& f) {
                if (is_squarefree(f)) ++count;
            });
            std::uint64_t qn = 1;
            for (int i = 0; i < n - 1; ++i) qn *= q;
            CHECK(count == qn * q - qn); // q^n - q^{n-1}
        }

        // sum over monic A with A^2 | D of mu(A) detects squarefreeness
        int max_deg = q == 3 ? 6 : 4;
        for (int n = 0; n <= max_deg; ++n)
            for_each_monic(spec, n, [&](const Poly& D) {
                int sum = 0;
                for (int a = 0; 2 * a <= n; ++a)
                    for_each_monic(spec, a, [&](const Poly& A) {
                        if ((D % (A * A)).is_zero()) sum += moebius(A);
                    });
                CHECK(sum == (is_squarefree(D) ? 1 : 0));
            });
    }
}
