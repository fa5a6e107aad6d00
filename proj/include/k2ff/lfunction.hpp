#pragma once

#include <complex>
#include <vector>

#include <gmpxx.h>

#include "k2ff/quad_char.hpp"

namespace k2ff {

/// Finite Dirichlet series L(s, chi_D) = sum_n c_n q^{-sn} for monic
/// squarefree D of odd degree 2g+1; c_n = sum over monic f of degree n
/// of chi_D(f), and c_n vanishes for n > 2g.
struct LPolynomial {
    Poly D;
    int g;
    std::vector<mpz_class> coeffs; // c_0 .. c_{2g}
};

/// zeta_A(s) = (1 - q^{1-s})^{-1} = q^{s-1} / (q^{s-1} - 1), s >= 2.
mpq_class zeta_A(FieldSpec spec, int s);

/// Coefficients via a per-D character table; also verifies that the two
/// coefficients past the cutoff vanish. The table variant needs
/// max_degree >= 2g+2.
LPolynomial l_polynomial(const Poly& D);
LPolynomial l_polynomial(const Poly& D, const CharTable& table);

/// Same coefficients by direct symbol evaluation, no sieve. Cross-check path.
LPolynomial l_polynomial_direct(const Poly& D);

mpq_class l_value(const LPolynomial& L, int s);

/// Group order q^{3g} L(2, chi_D); checked to be a positive integer.
mpz_class k2_order(const LPolynomial& L);
mpz_class k2_order(const Poly& D);

/// Coefficient symmetry c_{2g-n} = q^{g-n} c_n for 0 <= n <= g.
bool fe_check(const LPolynomial& L);

/// Roots of sum c_n u^n; throws if the iteration does not converge.
std::vector<std::complex<double>> l_roots(const LPolynomial& L);

/// Every root modulus within tol of q^{-1/2}.
bool rh_check(const LPolynomial& L, double tol = 1e-6);

} // namespace k2ff
