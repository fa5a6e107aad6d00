#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "k2ff/finite_field.hpp"

namespace k2ff {

/// Dense polynomial over F_q, coefficients ascending, no trailing zeros.
/// The zero polynomial has an empty coefficient vector and degree() == -1.
class Poly {
public:
    explicit Poly(FieldSpec spec) : spec_(spec) {}
    Poly(FieldSpec spec, std::vector<std::uint32_t> coeffs);

    static Poly zero(FieldSpec spec) { return Poly(spec); }
    static Poly one(FieldSpec spec) { return constant(spec, 1); }
    static Poly variable(FieldSpec spec) { return Poly(spec, {0, 1}); }
    static Poly constant(FieldSpec spec, std::uint32_t c);

    /// Accepts either "c0,c1,...,cn" or an expression like "T^3+2*T+2".
    static Poly parse(std::string_view text, FieldSpec spec);

    FieldSpec spec() const { return spec_; }
    std::uint32_t q() const { return spec_.q(); }

    /// -1 stands in for deg(0) = -infinity.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    std::uint32_t coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : 0;
    }
    std::uint32_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

    Poly derivative() const;
    FieldElement eval(const FieldElement& x) const;

    /// f / leading(f); identity on the zero polynomial.
    Poly monic_normalized() const;

    /// Expression form: "T^3+2*T+2". Round-trips through parse().
    std::string format() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Total order: by degree, then coefficient tuple from the top down.
    friend bool operator<(const Poly& a, const Poly& b);

private:
    void normalize();

    FieldSpec spec_;
    std::vector<std::uint32_t> coeffs_;
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator*(const Poly& f, const Poly& g);
Poly operator*(const FieldElement& c, const Poly& f);

/// (quotient, remainder) with deg(remainder) < deg(g). Throws on g = 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);

/// Monic-normalized gcd; gcd(0,0) = 0.
Poly gcd(Poly f, Poly g);

/// base^e mod m (m nonconstant).
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m);

/// |f| = q^deg(f) for f != 0, |0| = 0.
mpz_class poly_norm(const Poly& f);

/// Exact squarefreeness test; handles the characteristic-p case where
/// f' = 0 with deg f >= 1 forces f to be a p-th power. Throws on f = 0.
bool is_squarefree(const Poly& f);

bool is_irreducible(const Poly& f);

struct Factorization {
    FieldElement unit;
    std::vector<std::pair<Poly, int>> factors; // monic irreducibles, sorted

    Poly expand() const;
};

/// Trial division by cached irreducibles in degree order. Throws on f = 0.
Factorization factor(const Poly& f);

/// 0 if f not squarefree, else (-1)^(#distinct irreducible factors).
/// Requires f monic nonzero.
int moebius(const Poly& f);

/// Number of monic irreducibles of degree n (necklace-counting formula).
mpz_class irreducible_count(FieldSpec spec, int n);

/// All monic irreducibles of degree 1..max_degree, grouped by degree.
/// Result is cached per (q, max_degree) and safe to share across threads.
const std::vector<std::vector<Poly>>& irreducibles_up_to(FieldSpec spec, int max_degree);

// --- Enumeration of monic polynomials ---------------------------------------
//
// Monic f of degree n are indexed by i in [0, q^n): the lower coefficients
// are the base-q digits of i with the constant coefficient fastest-varying.

std::uint64_t monic_count(FieldSpec spec, int n); // q^n

Poly monic_by_index(FieldSpec spec, int n, std::uint64_t index);
std::uint64_t monic_index(const Poly& f);

/// Visits each monic polynomial of degree exactly n once, in index order.
void for_each_monic(FieldSpec spec, int n,
                    const std::function<void(const Poly&)>& fn);

/// The family H: monic squarefree of degree 2g+1, in index order.
void enumerate_H(FieldSpec spec, int g,
                 const std::function<void(const Poly&)>& fn);

} // namespace k2ff
