#pragma once

namespace cubic {

/*
 * Real-place counterpart of the coperiod ratio, for a spherical-line
 * parameter t and a weight ell.  All gamma factors are real-argument,
 * so doubles and std::tgamma carry the full computation.
 *
 * Writing zc(s) = 2 (2pi)^{-s} Gamma(s) and a = t + |ell|/2,
 * b = -t + |ell|/2, the two sides are
 *
 *   ratio = zc(1/2+3a) zc(1/2+a) zc(1/2+b) zc(1/2+3b)
 *           / [ zc(1) zc(1+2a) zc(1+2b) ]
 *
 *   rhs   = 3^{3|ell|-3} zc(2)^2 * triple / [ adjoint * exceptional^2 ]
 *
 * with triple the eight-factor product over e1 in {a, b} and
 * e2, e3 in {+-1/6}, and exceptional = zc(1) zc(4/3) zc(2/3).
 * The prefactor 3^{-3} is forced by the gamma triplication formula;
 * the variant with (2pi)^{-2} in its place misses by a constant and
 * is kept only to report that residual.
 */

double zeta_c(double s);

// |1 - Gamma(z)Gamma(z+1/3)Gamma(z+2/3) / (2pi 3^{1/2-3z} Gamma(3z))|
double gamma_triplication_residual(double z);

struct ArchParams {
    double t = 0.0;
    int ell = 0;
};

double l_adjoint_arch(const ArchParams& pr);
double l_sym3_arch(const ArchParams& pr);
double l_adjoint_exceptional();
double l_triple_arch(const ArchParams& pr);

// Left side: l_sym3_arch / l_adjoint_arch.
double coperiod_ratio_arch(const ArchParams& pr);
// Right side in the corrected 3^{-3} normalization.
double coperiod_rhs_arch(const ArchParams& pr);
// Right side as displayed with the (2pi)^{-2} prefactor.
double coperiod_rhs_arch_displayed(const ArchParams& pr);

// |1 - rhs/ratio| for the two normalizations.
double coperiod_residual_arch(const ArchParams& pr);
double coperiod_residual_arch_displayed(const ArchParams& pr);

}  // namespace cubic
