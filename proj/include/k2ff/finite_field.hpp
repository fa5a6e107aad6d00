#pragma once

#include <cstdint>
#include <stdexcept>

namespace k2ff {

/// The prime field F_q, q an odd prime. Desk-scale: q fits in 32 bits.
class FieldSpec {
public:
    explicit FieldSpec(std::uint32_t q);
    std::uint32_t q() const { return q_; }
    friend bool operator==(FieldSpec a, FieldSpec b) { return a.q_ == b.q_; }
    friend bool operator!=(FieldSpec a, FieldSpec b) { return a.q_ != b.q_; }

private:
    std::uint32_t q_;
};

/// An element of F_q stored as its canonical residue in [0, q).
class FieldElement {
public:
    FieldElement(std::uint32_t value, FieldSpec spec)
        : value_(value % spec.q()), spec_(spec) {}

    std::uint32_t value() const { return value_; }
    FieldSpec spec() const { return spec_; }
    std::uint32_t q() const { return spec_.q(); }
    bool is_zero() const { return value_ == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.spec_ == b.spec_ && a.value_ == b.value_;
    }

private:
    std::uint32_t value_;
    FieldSpec spec_;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);

FieldElement inverse(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t e);

/// Quadratic character of F_q: 0 for c=0, +1 for nonzero squares, -1 otherwise.
/// Computed as c^((q-1)/2) mapped to {-1,0,+1}.
int legendre_const(const FieldElement& c);

} // namespace k2ff
