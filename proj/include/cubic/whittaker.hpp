#pragma once

#include <complex>

#include "cubic/padic.hpp"
#include "cubic/symrat.hpp"

namespace cubic {

/*
 * Values of the spherical function on the torus live in the atom ring
 * times an integer power of the central generator z of degree d; the
 * power cannot be folded into the ring when d = 1 (z itself is a cube
 * root of a ring element), so it rides along as an exponent and is
 * only substituted when two values are paired.
 */
struct CValue {
    SymRat v;
    int central = 0;

    bool is_zero() const { return v.is_zero(); }
};

/*
 * Torus coefficient table attached to an unramified pair
 * (chi1, chi2)(pi^3), a Gauss slot orientation, and the central
 * degree.  value(a, b) evaluates the coefficient at diag(pi^a, pi^b):
 * off the support it is zero; on the support it reduces by central
 * shifts to the residue classes (0,0) and (2,1), where
 *   (0,0):  C'(3s, 3t) = Q^{3(s-t)} chi1(pi^3)^{-s} chi2(pi^3)^{-t}
 *   (2,1):  C'(a, b) = Q^{2e} G C'(b-1, a+1),
 *           e = a - b - floor((b - a - 2)/3)
 * with G the index-2 Gauss slot, conjugated when sign < 0.
 */
struct CFunction {
    int sign = +1;  // +1 uses G2, -1 uses Gb2
    int d = 3;      // central degree: 3 or 1
    SymMono chi1 = mono_one(), chi2 = mono_one();

    bool on_support(long a, long b) const;
    CValue value(long a, long b) const;

    // The two residue-class cases above, before central reduction.
    SymRat c_prime(long a, long b) const;
};

CFunction make_c_function(const SymMono& chi1, const SymMono& chi2, int sign, int d);

// Torus value of the spherical Whittaker function: the coefficient at
// the reflected index damped by the modulus factor Q^{-2(a-b)},
// supported on dominant a >= b.
CValue spherical_whittaker(const CFunction& f, long a, long b);

// Product of two paired values; zz is the substitution for the product
// of the two central generators.  Both factors must carry the same
// central exponent.
SymRat pair_product(const CValue& x, const CValue& y, const SymMono& zz);

// Torus sum of pair products of two Whittaker values over class
// representatives up to class depth N, gauss-normalized term by term.
// Closed form: zeta(1) (1 - Q^{-4N-4}) when B is the dual table of A.
SymRat whittaker_inner(const CFunction& A, const CFunction& B, const SymMono& zz, int depth);

// Plain additive-character Gauss sum over F_p for the cubic residue
// power i, with the root of unity pinned by CycloCoeff::zeta().
std::complex<double> gauss_sum_numeric(const PrimeContext& ctx, int i);

// Numeric atom assignment: Q = sqrt(p), gauss slots from the sums
// above, u on the branch u^2 = (t1 t2)^{-3}.
std::array<std::complex<double>, kAtoms> numeric_atom_values(const PrimeContext& ctx,
                                                             std::complex<double> t1,
                                                             std::complex<double> t2,
                                                             std::complex<double> x);

}  // namespace cubic
