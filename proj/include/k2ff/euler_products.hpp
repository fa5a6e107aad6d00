#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "k2ff/finite_field.hpp"

namespace k2ff {

/// Minimal RAII wrapper over an mpfr_t at fixed 256-bit precision.
/// Rounding error is far below every tolerance used in this project;
/// exact rationals are used wherever products stay small enough.
class BigFloat {
public:
    static constexpr mpfr_prec_t kPrecision = 256;

    BigFloat() { mpfr_init2(x_, kPrecision); mpfr_set_ui(x_, 0, MPFR_RNDN); }
    explicit BigFloat(unsigned long v) : BigFloat() { mpfr_set_ui(x_, v, MPFR_RNDN); }
    explicit BigFloat(double v) : BigFloat() { mpfr_set_d(x_, v, MPFR_RNDN); }
    explicit BigFloat(const mpz_class& v) : BigFloat() {
        mpfr_set_z(x_, v.get_mpz_t(), MPFR_RNDN);
    }
    explicit BigFloat(const mpq_class& v) : BigFloat() {
        mpfr_set_q(x_, v.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) : BigFloat() { mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept : BigFloat() { mpfr_swap(x_, o.x_); }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }

    /// this^e for an integer exponent (may be huge).
    BigFloat pow(const mpz_class& e) const {
        BigFloat r;
        mpfr_pow_z(r.x_, x_, e.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    BigFloat abs() const {
        BigFloat r;
        mpfr_abs(r.x_, x_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    /// Fixed-point decimal with the given number of fractional digits.
    std::string str(int digits) const;

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }

private:
    mpfr_t x_;
};

/// Euler product over monic irreducibles truncated at degree N, with an
/// exact rational majorant for the relative truncation error.
struct TruncatedProduct {
    BigFloat value;
    int truncation_degree = 0;
    mpq_class tail_bound;
    std::uint32_t q = 0;
    int s = 0; // exponent for P(s); 0 identifies the c(2) product
};

/// P(s) = prod_P (1 - 1/((|P|+1)|P|^s)), truncated so the tail bound
/// falls below rel_err.
TruncatedProduct euler_P(FieldSpec spec, int s, double rel_err);

/// c(2) = prod_P (1 - |P|^{-2} - |P|^{-5} + |P|^{-6}), same contract.
TruncatedProduct euler_c2(FieldSpec spec, double rel_err);

/// Exact rational truncations (feasible only for modest N); used as the
/// independent cross-check of the floating accumulation and its tail bound.
mpq_class euler_P_exact(FieldSpec spec, int s, int truncation_degree);
mpq_class euler_c2_exact(FieldSpec spec, int truncation_degree);
mpq_class euler_P_tail(FieldSpec spec, int s, int truncation_degree);
mpq_class euler_c2_tail(FieldSpec spec, int truncation_degree);

/// q^{3g} zeta_A(4) P(4).
BigFloat main_term_mean_k2(FieldSpec spec, int g, const TruncatedProduct& P4);

/// zeta_A(2) zeta_A(4) c(2) q^{3(M-1)/2}, M odd.
BigFloat main_term_all_squarefree(FieldSpec spec, int M, const TruncatedProduct& c2);

} // namespace k2ff
