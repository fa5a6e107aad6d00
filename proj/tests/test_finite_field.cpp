#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "k2ff/finite_field.hpp"

using namespace k2ff;

TEST_CASE("FieldSpec rejects non-prime and even cardinalities") {
    CHECK_NOTHROW(FieldSpec(3));
    CHECK_NOTHROW(FieldSpec(101));
    CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(2), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(9), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(15), std::invalid_argument);
}

TEST_CASE("basic arithmetic") {
    FieldSpec f3(3);
    // 2+2 = 4 = 1 mod 3
    CHECK((FieldElement(2, f3) + FieldElement(2, f3)).value() == 1);
    // 2*2 = 1, so 2^{-1} = 2
    CHECK(inverse(FieldElement(2, f3)).value() == 2);
    // Fermat: 3^4 = 1 in F_5
    FieldSpec f5(5);
    CHECK(pow(FieldElement(3, f5), 4).value() == 1);
    CHECK((FieldElement(1, f5) - FieldElement(3, f5)).value() == 3);
    CHECK((FieldElement(2, f5) / FieldElement(3, f5)).value() == 4); // 4*3 = 12 = 2
}

TEST_CASE("mixed-spec operations and zero division are rejected") {
    FieldElement a(1, FieldSpec(3));
    FieldElement b(1, FieldSpec(5));
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a / FieldElement(0, FieldSpec(3)), std::domain_error);
    CHECK_THROWS_AS(inverse(FieldElement(0, FieldSpec(3))), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively for q=7") {
    FieldSpec f7(7);
    for (std::uint32_t a = 0; a < 7; ++a)
        for (std::uint32_t b = 1; b < 7; ++b) {
            FieldElement x(a, f7), y(b, f7);
            CHECK((x / y) * y == x);
            CHECK(x + (-x) == FieldElement(0, f7));
        }
}

TEST_CASE("legendre_const against the exhaust-squares oracle") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
        FieldSpec spec(q);
        std::set<std::uint32_t> squares;
        for (std::uint32_t x = 1; x < q; ++x) squares.insert(x * x % q);
        for (std::uint32_t c = 0; c < q; ++c) {
            int expected = c == 0 ? 0 : squares.count(c) ? 1 : -1;
            CHECK(legendre_const(FieldElement(c, spec)) == expected);
        }
        CHECK(squares.size() == (q - 1) / 2);
    }
    // the spec'd spot values
    FieldSpec f3(3);
    CHECK(legendre_const(FieldElement(0, f3)) == 0);
    CHECK(legendre_const(FieldElement(1, f3)) == 1);
    CHECK(legendre_const(FieldElement(2, f3)) == -1);
}

TEST_CASE("legendre_const is multiplicative") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
        FieldSpec spec(q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                FieldElement x(a, spec), y(b, spec);
                CHECK(legendre_const(x * y) == legendre_const(x) * legendre_const(y));
            }
    }
}
