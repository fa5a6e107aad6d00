#include "k2ff/finite_field.hpp"

namespace k2ff {

namespace {

bool is_odd_prime(std::uint32_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_same_spec(const FieldElement& a, const FieldElement& b) {
    if (a.spec() != b.spec())
        throw std::invalid_argument("field element spec mismatch");
}

} // namespace

FieldSpec::FieldSpec(std::uint32_t q) : q_(q) {
    if (!is_odd_prime(q))
        throw std::invalid_argument("field cardinality must be an odd prime >= 3");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    return {(a.value() + b.value()) % a.q(), a.spec()};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    return {(a.value() + a.q() - b.value()) % a.q(), a.spec()};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    std::uint64_t p = static_cast<std::uint64_t>(a.value()) * b.value();
    return {static_cast<std::uint32_t>(p % a.q()), a.spec()};
}

FieldElement operator-(const FieldElement& a) {
    return {(a.q() - a.value()) % a.q(), a.spec()};
}

FieldElement pow(const FieldElement& a, std::uint64_t e) {
    std::uint64_t base = a.value(), result = 1;
    const std::uint64_t q = a.q();
    while (e > 0) {
        if (e & 1) result = result * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return {static_cast<std::uint32_t>(result), a.spec()};
}

FieldElement inverse(const FieldElement& a) {
    if (a.is_zero()) throw std::domain_error("division by zero in F_q");
    return pow(a, a.q() - 2);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    return a * inverse(b);
}

int legendre_const(const FieldElement& c) {
    if (c.is_zero()) return 0;
    std::uint32_t r = pow(c, (c.q() - 1) / 2).value();
    return r == 1 ? 1 : -1;
}

} // namespace k2ff
