#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>

#include "cubic/cyclo.hpp"

namespace cubic {

/*
 * Laurent ring in nine atoms
 *   Q  = q^{1/2},  t1, t2  (Satake slots),  u  (cube branch unit),
 *   X  = q^{-s},   G1, G2, Gb1, Gb2  (Gauss sum slots)
 * over Q(zeta_3), modulo the branch relation
 *   u^2 = (t1 t2)^{-3}
 * which is folded into every monomial: the canonical u-exponent is 0
 * or 1, with u^{2k} traded for (t1 t2)^{-3k}.  The relation makes the
 * monoid of monomials cancellative, so equality stays decidable.
 *
 * Gauss pair cancellation Gi*Gbi = q is deliberately NOT folded: it is
 * a separate normalization (reduce_gauss) applied where a product of a
 * table value and a conjugate table value is being compared.  Rational
 * functions are unreduced num/den pairs; equality is decided by
 * cross-multiplication after reduce_gauss on both sides.
 */

enum Atom : int { AQ = 0, AT1, AT2, AU, AX, AG1, AG2, AGB1, AGB2 };
inline constexpr int kAtoms = 9;

using SymMono = std::array<int, kAtoms>;

// Canonical u-exponent: fold u^{2k+r} -> u^r (t1 t2)^{-3k}.
void fold_mono(SymMono& m);
SymMono mono_mul(const SymMono& x, const SymMono& y);
SymMono mono_pow(const SymMono& m, long k);
SymMono mono_one();
SymMono mono_atom(Atom a, int e = 1);

class SymPoly {
  public:
    SymPoly() = default;
    explicit SymPoly(const CycloCoeff& c);
    explicit SymPoly(long n) : SymPoly(CycloCoeff(n)) {}
    static SymPoly monomial(const SymMono& m, const CycloCoeff& c = CycloCoeff(1));

    bool is_zero() const { return t_.empty(); }
    const std::map<SymMono, CycloCoeff>& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    void add_term(const SymMono& m, const CycloCoeff& c);

    friend SymPoly operator+(const SymPoly& x, const SymPoly& y);
    friend SymPoly operator-(const SymPoly& x, const SymPoly& y);
    friend SymPoly operator*(const SymPoly& x, const SymPoly& y);
    SymPoly operator-() const;
    friend bool operator==(const SymPoly& x, const SymPoly& y) { return x.t_ == y.t_; }

  private:
    std::map<SymMono, CycloCoeff> t_;  // zero coefficients never stored
};

struct SymRat {
    SymPoly num, den;

    SymRat() : num(), den(1) {}
    explicit SymRat(const SymPoly& n) : num(n), den(1) {}
    SymRat(SymPoly n, SymPoly d);

    static SymRat from_atom(Atom a, int e = 1);
    static SymRat from_mono(const SymMono& m);
    static SymRat constant(const CycloCoeff& c) { return SymRat(SymPoly(c)); }
    static SymRat integer(long n) { return SymRat(SymPoly(n)); }

    bool is_zero() const { return num.is_zero(); }

    friend SymRat operator+(const SymRat& x, const SymRat& y);
    friend SymRat operator-(const SymRat& x, const SymRat& y);
    friend SymRat operator*(const SymRat& x, const SymRat& y);
    friend SymRat operator/(const SymRat& x, const SymRat& y);
    SymRat operator-() const;
    SymRat inverse() const;
    SymRat pow(int e) const;
};

// Same-sign Gauss pair cancellation on each monomial:
//   Gi^a Gbi^b with a,b > 0 drops a pair for Q^2, with a,b < 0 gains
//   one for Q^{-2}.  Mixed signs are left alone (they do not occur in
//   the values this ring is used for).
SymPoly reduce_gauss(const SymPoly& p);

// Exact equality of rational functions: cross-multiply, reduce, compare.
bool eq_crossmul(const SymRat& x, const SymRat& y);

// Keep monomials with exponent of var at most n (and at least lo if given).
SymPoly trunc_var(const SymPoly& p, Atom var, int n);

// Geometric expansion of x as a power series, truncated to var-degree
// at most n.  Works in the folded grading 2 e[var] - 3 e[u] (for the
// t-atoms), which product monomials respect; the denominator must have
// a unique minimal-grading monomial and no others at that grading,
// otherwise std::domain_error.
SymPoly series_expand(const SymRat& x, Atom var, int n);

// Substitute atoms: repl[i] == nullptr keeps atom i.
SymRat subst(const SymRat& x, const std::array<const SymRat*, kAtoms>& repl);

std::complex<double> eval_poly(const SymPoly& p, const std::array<std::complex<double>, kAtoms>& v);
std::complex<double> eval_rat(const SymRat& x, const std::array<std::complex<double>, kAtoms>& v);

std::string to_string(const SymMono& m);
std::string to_string(const SymPoly& p);
std::string to_string(const SymRat& x);

}  // namespace cubic
