#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "k2ff/poly.hpp"

namespace k2ff {

/// Kronecker symbol (top/bottom) in F_q[T], bottom monic (or 1).
/// Euclidean evaluation: reduce mod bottom, peel the leading coefficient
/// through the scalar rule, swap via quadratic reciprocity
///   (a/b)(b/a) = (-1)^{((q-1)/2) deg a deg b}   for monic coprime a, b.
int kronecker(const Poly& top, const Poly& bottom);

/// Definitional route: factor the bottom and evaluate (top/P) = top^{(|P|-1)/2}
/// mod P on each irreducible. Reference oracle for kronecker().
int kronecker_oracle(const Poly& top, const Poly& bottom);

/// Scalar rule (c/f) = legendre_const(c)^{deg f} for monic f.
int scalar_char(const FieldElement& c, const Poly& f);

/// Index over all monic polynomials of degree <= max_degree, with a
/// smallest-irreducible-factor table for sieving multiplicative functions.
/// Built once per (q, max_degree) and then read-only shared.
class MonicSieve {
public:
    MonicSieve(FieldSpec spec, int max_degree);

    /// Shared instance from a process-wide cache.
    static std::shared_ptr<const MonicSieve> shared(FieldSpec spec, int max_degree);

    FieldSpec spec() const { return spec_; }
    int max_degree() const { return max_degree_; }
    std::size_t size() const { return spf_.size(); }

    std::size_t index_of(const Poly& f) const;
    Poly poly_at(std::size_t idx) const;
    int degree_at(std::size_t idx) const;
    std::size_t first_index_of_degree(int n) const {
        return static_cast<std::size_t>(offset_[static_cast<std::size_t>(n)]);
    }
    bool irreducible_at(std::size_t idx) const { return idx > 0 && spf_[idx] == idx; }

    /// Table of a completely multiplicative function given its values on
    /// monic irreducibles. Entry order matches the monic index.
    template <class OnIrreducible>
    std::vector<std::int8_t> multiplicative_table(OnIrreducible&& on_irreducible) const {
        std::vector<std::int8_t> vals(size());
        vals[0] = 1;
        for (std::size_t i = 1; i < size(); ++i) {
            if (spf_[i] == i)
                vals[i] = static_cast<std::int8_t>(on_irreducible(poly_at(i)));
            else
                vals[i] = static_cast<std::int8_t>(vals[spf_[i]] * vals[quot_[i]]);
        }
        return vals;
    }

    /// Multiset of (irreducible index, multiplicity), via the factor chain.
    std::vector<std::pair<std::size_t, int>> factor_indices(std::size_t idx) const;

private:
    FieldSpec spec_;
    int max_degree_;
    std::vector<std::uint64_t> offset_; // offset_[n]: first index of degree n
    std::vector<std::uint32_t> spf_;    // some irreducible factor (self if irreducible)
    std::vector<std::uint32_t> quot_;   // index of poly / spf
};

/// Values of chi_D = (D/.) on all monic f with deg f <= max_degree.
class CharTable {
public:
    CharTable(Poly D, int max_degree);
    CharTable(Poly D, std::shared_ptr<const MonicSieve> sieve);

    const Poly& discriminant() const { return D_; }
    int max_degree() const { return sieve_->max_degree(); }
    const MonicSieve& sieve() const { return *sieve_; }

    int at(std::size_t idx) const { return vals_[idx]; }
    int operator()(const Poly& f) const { return vals_[sieve_->index_of(f)]; }

private:
    Poly D_;
    std::shared_ptr<const MonicSieve> sieve_;
    std::vector<std::int8_t> vals_;
};

} // namespace k2ff
