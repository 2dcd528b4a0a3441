#pragma once

#include <array>

#include "cubic/chars.hpp"
#include "cubic/whittaker.hpp"

namespace cubic {

/*
 * Unramified co-period: the paired torus sums of two spherical
 * Whittaker families collapse to a quotient of local L-factors.  All
 * identities below are exact in the folded atom ring; the branch unit
 * u is only specialized at the very end.
 */

// Local factors; the argument is 2s, through Q^{-2s} = q^{-s}.
SymRat zeta_q(int two_s);
SymRat l_adjoint(int two_s);
// Four cubic Satake monomials; twist = -1 flips every root's sign.
SymRat l_sym3(int two_s, int twist = +1);

struct SatakeData {
    int c = 0;  // cover twist parameter
    int d = 3;  // central degree
    SubstitutionTable subs;
    CFunction cp, cm, cpv, cmv;
    SymMono zz;        // substitution for the paired central generators
    SymMono zz_dual;   // same for the dual pair
    SymMono branch;    // the unit u, realized as chi_+1 chi_-2

    static SatakeData make(int c);
};

// Geometric ratios {A, B, f3, f4} = Q^{-1} u {t1^2 t2, t1^3, t1 t2^2, t2^3},
// assembled from the compiled character values.
std::array<SymMono, 4> psi_ratios(const SatakeData& s);

// Torus-unipotent double sum, truncated to degree n in t1 (primal)
// or t2 (dual).
SymPoly psi_series(const SatakeData& s, bool dual, int n);

// Closed form (1 - A^2)/((1 - A)(1 - B)), dual (1 - f3^2)/((1 - f3)(1 - f4)).
SymRat psi_closed(const SatakeData& s, bool dual);

// zeta(1)^{-1} Psi Psi^dual
SymRat unramified_coperiod(const SatakeData& s);

// Right side of the identity: prod_i (1 - f_i)^{-1} / l_adjoint(2).
SymRat coperiod_rhs(const SatakeData& s);

bool verify_coperiod_identity(const SatakeData& s);

/*
 * Branch specialization u -> +-1.  The fold relation then forces
 * (t1 t2)^3 = 1, so specialized identities are read modulo that
 * torsion; reduce_torsion3 is the normal form with t2-exponents in
 * {0, 1, 2} (monomials with a residual u-exponent are rejected).
 */
SymPoly reduce_torsion3(const SymPoly& p);
SymRat specialize_branch(const SymRat& x, int u_sign);
bool eq_mod_torsion3(const SymRat& x, const SymRat& y);

/*
 * Degenerate (Eisenstein) specialization: the compatibility constraint
 * on the section pins the branch unit, and the slope substitution
 * t1 = Q^{-1} X, t2 = Q X^{-1}, u = 1 collapses Psi to
 * zeta(1+s) zeta(2+3s) / zeta(2+2s) with X = q^{-s}.
 */
SymMono eisenstein_branch_requirement(const SubstitutionTable& t);
SymRat eisenstein_specialize(const SymRat& psi);
SymRat eisenstein_zeta_quotient();

// Constants of the radial route through the lower-triangular chart:
// zeta(2)/zeta(1) from the measure, plus the geometric tail Q^{-2} of
// the unipotent levels; their combination is exactly 1.
struct TorusIntegralConstants {
    SymRat zeta2_over_zeta1;
    SymRat lower_unip_tail;
};
TorusIntegralConstants torus_integral_constants();

// The same series as psi_series(primal), but assembled from Whittaker
// pair products with the radial weight q^a and the route constants;
// exercises the modulus bookkeeping from the other side.
SymRat psi_series_whittaker_route(const SatakeData& s, int n);

}  // namespace cubic
