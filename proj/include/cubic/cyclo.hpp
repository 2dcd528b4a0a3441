#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace cubic {

using Rational = boost::multiprecision::cpp_rational;

/*
 * Exact arithmetic in Q(zeta_3): numbers a + b zeta with zeta^2 = -1 - zeta.
 * Norm is a^2 - ab + b^2; conjugation sends zeta to zeta^2 = -1 - zeta.
 */
struct CycloCoeff {
    Rational a, b;

    CycloCoeff() : a(0), b(0) {}
    CycloCoeff(long n) : a(n), b(0) {}
    CycloCoeff(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

    static CycloCoeff zeta() { return CycloCoeff(Rational(0), Rational(1)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_one() const { return a == 1 && b == 0; }

    friend CycloCoeff operator+(const CycloCoeff& x, const CycloCoeff& y) {
        return CycloCoeff(x.a + y.a, x.b + y.b);
    }
    friend CycloCoeff operator-(const CycloCoeff& x, const CycloCoeff& y) {
        return CycloCoeff(x.a - y.a, x.b - y.b);
    }
    CycloCoeff operator-() const { return CycloCoeff(-a, -b); }
    friend CycloCoeff operator*(const CycloCoeff& x, const CycloCoeff& y) {
        // (a + b z)(c + d z) = ac - bd + (ad + bc - bd) z
        return CycloCoeff(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b);
    }
    friend bool operator==(const CycloCoeff& x, const CycloCoeff& y) {
        return x.a == y.a && x.b == y.b;
    }

    CycloCoeff conj() const { return CycloCoeff(a - b, -b); }
    Rational norm() const { return a * a - a * b + b * b; }
    CycloCoeff inv() const;

    std::complex<double> embed() const;
};

std::string to_string(const CycloCoeff& c);

}  // namespace cubic
