#include "cubic/whittaker.hpp"

#include <cmath>
#include <stdexcept>

namespace cubic {

namespace {

long mod3(long x) { return ((x % 3) + 3) % 3; }
long floordiv3(long x) { return (x - mod3(x)) / 3; }

}  // namespace

bool CFunction::on_support(long a, long b) const {
    long r = mod3(a - b);
    if (d == 3) return (r == 0 && mod3(a) == 0) || (r == 1 && mod3(a) == 2);
    return r == 0 || r == 1;
}

SymRat CFunction::c_prime(long a, long b) const {
    if (mod3(a) == 0 && mod3(b) == 0) {
        long s = a / 3, t = b / 3;
        SymMono m = mono_atom(AQ, static_cast<int>(3 * (s - t)));
        m = mono_mul(m, mono_pow(chi1, -s));
        m = mono_mul(m, mono_pow(chi2, -t));
        return SymRat::from_mono(m);
    }
    if (mod3(a) == 2 && mod3(b) == 1) {
        long e = a - b - floordiv3(b - a - 2);
        SymMono m = mono_atom(AQ, static_cast<int>(2 * e));
        m = mono_mul(m, mono_atom(sign > 0 ? AG2 : AGB2));
        return SymRat::from_mono(m) * c_prime(b - 1, a + 1);
    }
    throw std::domain_error("c_prime: index not in a base residue class");
}

CValue CFunction::value(long a, long b) const {
    if (!on_support(a, b)) return CValue{};
    long j = 0;
    if (d == 1) {
        long r = mod3(a - b);
        j = (r == 0) ? mod3(a) : mod3(a - 2);
    }
    return CValue{c_prime(a - j, b - j), static_cast<int>(-j)};
}

CFunction make_c_function(const SymMono& chi1, const SymMono& chi2, int sign, int d) {
    if (d != 1 && d != 3) throw std::invalid_argument("central degree must be 1 or 3");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    CFunction f;
    f.sign = sign;
    f.d = d;
    f.chi1 = chi1;
    f.chi2 = chi2;
    return f;
}

CValue spherical_whittaker(const CFunction& f, long a, long b) {
    if (a < b) return CValue{};
    CValue c = f.value(-b, -a);
    if (c.is_zero()) return c;
    SymRat damp = SymRat::from_atom(AQ, static_cast<int>(-2 * (a - b)));
    return CValue{damp * c.v, c.central};
}

SymRat pair_product(const CValue& x, const CValue& y, const SymMono& zz) {
    if (x.is_zero() || y.is_zero()) return SymRat();
    if (x.central != y.central)
        throw std::domain_error("pair_product: mismatched central exponents");
    SymRat r = x.v * y.v * SymRat::from_mono(mono_pow(zz, x.central));
    return SymRat(reduce_gauss(r.num), reduce_gauss(r.den));
}

SymRat whittaker_inner(const CFunction& A, const CFunction& B, const SymMono& zz, int depth) {
    if (A.d != B.d) throw std::domain_error("whittaker_inner: mismatched central degrees");
    SymRat total;
    auto add_class = [&](long a, long b) {
        CValue wa = spherical_whittaker(A, a, b);
        CValue wb = spherical_whittaker(B, a, b);
        if (wa.is_zero() || wb.is_zero()) return;
        total = total + pair_product(wa, wb, zz);
    };
    if (A.d == 3) {
        // Central shifts of eta_{a,b} step by 3; one representative per
        // class lands on the support in each family.
        for (long n = 0; n <= depth; ++n) {
            add_class(3 * n, 0);
            add_class(3 * n + 2, 1);
        }
    } else {
        // Degree-1 center: classes are represented on the line b = 0.
        for (long m = 0; m <= 3 * static_cast<long>(depth) + 2; ++m) add_class(m, 0);
    }
    return SymRat(reduce_gauss(total.num), reduce_gauss(total.den));
}

std::complex<double> gauss_sum_numeric(const PrimeContext& ctx, int i) {
    const double pi2 = 6.283185307179586476925287;
    std::complex<double> zeta = CycloCoeff::zeta().embed();
    std::complex<double> s = 0;
    for (long x = 1; x < ctx.p(); ++x) {
        int e = (ctx.residue_class(x).e * i) % 3;
        std::complex<double> chi = 1;
        for (int k = 0; k < e; ++k) chi *= zeta;
        double arg = pi2 * static_cast<double>(x) / static_cast<double>(ctx.p());
        s += chi * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return s;
}

std::array<std::complex<double>, kAtoms> numeric_atom_values(const PrimeContext& ctx,
                                                             std::complex<double> t1,
                                                             std::complex<double> t2,
                                                             std::complex<double> x) {
    std::array<std::complex<double>, kAtoms> v;
    v[AQ] = std::sqrt(static_cast<double>(ctx.p()));
    v[AT1] = t1;
    v[AT2] = t2;
    std::complex<double> tt = t1 * t2;
    v[AU] = 1.0 / std::sqrt(tt * tt * tt);
    v[AX] = x;
    v[AG1] = gauss_sum_numeric(ctx, 1);
    v[AG2] = gauss_sum_numeric(ctx, 2);
    v[AGB1] = std::conj(v[AG1]);
    v[AGB2] = std::conj(v[AG2]);
    return v;
}

}  // namespace cubic
