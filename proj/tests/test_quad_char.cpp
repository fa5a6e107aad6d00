#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "k2ff/quad_char.hpp"

using namespace k2ff;

namespace {
FieldSpec f3(3);
Poly P(const char* text, FieldSpec spec = f3) { return Poly::parse(text, spec); }
} // namespace

TEST_CASE("kronecker spot values") {
    CHECK(kronecker(P("T^3+2*T+1"), Poly::one(f3)) == 1); // (D/1) = 1
    CHECK(kronecker(P("T"), P("T+1")) == -1); // T = 2 mod T+1, 2^1 = -1
    CHECK(kronecker(P("T"), P("T")) == 0);
    CHECK(kronecker(Poly::zero(f3), P("T")) == 0);
    CHECK(kronecker(Poly::zero(f3), Poly::one(f3)) == 1);
    CHECK(kronecker(P("T+1"), P("T^2")) == 1); // (+1)^2
    CHECK(kronecker(P("2", FieldSpec(5)), P("T", FieldSpec(5))) == -1);
    CHECK_THROWS_AS(kronecker(P("T"), P("2*T")), std::domain_error);
    CHECK_THROWS_AS(kronecker(P("T"), Poly::zero(f3)), std::domain_error);
}

TEST_CASE("scalar_char") {
    CHECK(scalar_char(FieldElement(1, f3), P("T^4+T")) == 1);
    CHECK(scalar_char(FieldElement(2, f3), P("T")) == -1);
    CHECK(scalar_char(FieldElement(2, f3), P("T^2+1")) == 1);
    CHECK(scalar_char(FieldElement(0, f3), P("T")) == 0);
    CHECK_THROWS_AS(scalar_char(FieldElement(2, f3), P("2*T")), std::domain_error);

    // agrees with kronecker on constant tops
    for (std::uint32_t q : {3u, 5u}) {
        FieldSpec spec(q);
        for (std::uint32_t c = 0; c < q; ++c)
            for (int n = 1; n <= 3; ++n)
                for_each_monic(spec, n, [&](const Poly& f) {
                    CHECK(scalar_char(FieldElement(c, spec), f) ==
                          kronecker(Poly::constant(spec, c), f));
                });
    }
}

TEST_CASE("fast path vs factorization oracle, exhaustive deg <= 4 at q=3") {
    // the full deg <= 5 sweep lives in the acceptance suite
    for (int dt = 0; dt <= 4; ++dt) {
        std::uint64_t tops = 1;
        for (int i = 0; i <= dt; ++i) tops *= 3;
        for (std::uint64_t ti = 0; ti < tops; ++ti) {
            std::vector<std::uint32_t> tc;
            std::uint64_t v = ti;
            for (int i = 0; i <= dt; ++i) { tc.push_back(v % 3); v /= 3; }
            Poly top(f3, tc);
            for (int db = 1; db <= 4; ++db)
                for_each_monic(f3, db, [&](const Poly& bottom) {
                    CHECK(kronecker(top, bottom) == kronecker_oracle(top, bottom));
                });
        }
    }
}

TEST_CASE("bottom multiplicativity (D/fg) = (D/f)(D/g)") {
    for (int dd = 0; dd <= 3; ++dd)
        for_each_monic(f3, dd, [&](const Poly& D) {
            for (int df = 1; df <= 3; ++df)
                for_each_monic(f3, df, [&](const Poly& f) {
                    for (int dg = 1; dg <= 3; ++dg)
                        for_each_monic(f3, dg, [&](const Poly& g) {
                            CHECK(kronecker(D, f * g) ==
                                  kronecker(D, f) * kronecker(D, g));
                        });
                });
        });
}

TEST_CASE("top periodicity (D/f) = ((D + h*f)/f)") {
    std::srand(7);
    for (int dd = 0; dd <= 3; ++dd)
        for_each_monic(f3, dd, [&](const Poly& D) {
            for (int df = 1; df <= 3; ++df)
                for_each_monic(f3, df, [&](const Poly& f) {
                    std::vector<std::uint32_t> hc(5);
                    for (auto& c : hc) c = std::rand() % 3;
                    Poly h(f3, hc);
                    CHECK(kronecker(D, f) == kronecker(D + h * f, f));
                });
        });
}

TEST_CASE("quadratic reciprocity for monic coprime pairs") {
    for (std::uint32_t q : {3u, 5u}) {
        FieldSpec spec(q);
        int sign_base = (q - 1) / 2 % 2 == 0 ? 1 : -1; // q = 1 mod 4 kills the sign
        int max_deg = q == 3 ? 4 : 3;
        for (int da = 1; da <= max_deg; ++da)
            for_each_monic(spec, da, [&](const Poly& a) {
                for (int db = 1; db <= max_deg; ++db)
                    for_each_monic(spec, db, [&](const Poly& b) {
                        if (!gcd(a, b).is_one()) return;
                        int expected = (da * db) % 2 == 1 ? sign_base : 1;
                        CHECK(kronecker(a, b) * kronecker(b, a) == expected);
                    });
            });
    }
}

TEST_CASE("MonicSieve indexing and irreducible marking") {
    MonicSieve sieve(f3, 4);
    CHECK(sieve.size() == 1 + 3 + 9 + 27 + 81);
    for (int n = 0; n <= 4; ++n)
        for_each_monic(f3, n, [&](const Poly& f) {
            std::size_t idx = sieve.index_of(f);
            CHECK(sieve.poly_at(idx) == f);
            CHECK(sieve.degree_at(idx) == n);
            if (n >= 1) CHECK(sieve.irreducible_at(idx) == is_irreducible(f));
        });
}

TEST_CASE("factor_indices reproduces the factorization") {
    MonicSieve sieve(f3, 5);
    for (int n = 1; n <= 5; ++n)
        for_each_monic(f3, n, [&](const Poly& f) {
            Poly prod = Poly::one(f3);
            for (auto [pi, e] : sieve.factor_indices(sieve.index_of(f))) {
                CHECK(sieve.irreducible_at(pi));
                for (int i = 0; i < e; ++i) prod = prod * sieve.poly_at(pi);
            }
            CHECK(prod == f);
        });
}

TEST_CASE("multiplicative_table extends values from irreducibles") {
    MonicSieve sieve(f3, 4);
    // degree parity character: completely multiplicative with value -1 on
    // every irreducible of odd degree
    auto vals = sieve.multiplicative_table(
        [](const Poly& p) { return p.degree() % 2 == 1 ? -1 : 1; });
    for (int n = 0; n <= 4; ++n)
        for_each_monic(f3, n, [&](const Poly& f) {
            CHECK(vals[sieve.index_of(f)] == (n % 2 == 1 ? -1 : 1));
        });
}

TEST_CASE("CharTable matches kronecker pointwise") {
    Poly D = P("T^3+2*T+1");
    CharTable table(D, 4);
    CHECK(table(Poly::one(f3)) == 1);
    for (int n = 0; n <= 4; ++n)
        for_each_monic(f3, n, [&](const Poly& f) {
            CHECK(table(f) == kronecker(D, f));
        });
    CHECK_THROWS_AS(CharTable(P("T^2"), 2), std::domain_error);  // not squarefree
    CHECK_THROWS_AS(CharTable(P("2*T"), 2), std::domain_error);  // not monic
}

TEST_CASE("CharTable matches kronecker for random D over q in {3,5}, g in {1,2}") {
    std::srand(20260823);
    for (std::uint32_t q : {3u, 5u})
        for (int g = 1; g <= 2; ++g) {
            FieldSpec spec(q);
            int checked = 0;
            while (checked < 10) {
                std::vector<std::uint32_t> dc(static_cast<std::size_t>(2 * g + 2));
                for (auto& c : dc) c = std::rand() % q;
                dc.back() = 1;
                Poly D(spec, dc);
                if (!is_squarefree(D)) continue;
                CharTable table(D, 2 * g + 2);
                for (int n = 0; n <= 2 * g + 2; ++n)
                    for_each_monic(spec, n, [&](const Poly& f) {
                        CHECK(table(f) == kronecker(D, f));
                    });
                ++checked;
            }
        }
}
