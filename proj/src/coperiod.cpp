#include "cubic/coperiod.hpp"

#include <stdexcept>

#include "cubic/cover.hpp"

namespace cubic {

namespace {

SymRat one_minus(const SymMono& m) {
    return SymRat::integer(1) - SymRat::from_mono(m);
}

std::array<SymMono, 3> adjoint_monos() {
    return {mono_mul(mono_atom(AT1), mono_atom(AT2, -1)), mono_one(),
            mono_mul(mono_atom(AT1, -1), mono_atom(AT2))};
}

std::array<SymMono, 4> sym3_monos() {
    return {mono_atom(AT1, 3), mono_mul(mono_atom(AT1, 2), mono_atom(AT2)),
            mono_mul(mono_atom(AT1), mono_atom(AT2, 2)), mono_atom(AT2, 3)};
}

long floordiv(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

SymRat zeta_q(int two_s) { return one_minus(mono_atom(AQ, -two_s)).inverse(); }

SymRat l_adjoint(int two_s) {
    SymRat r = SymRat::integer(1);
    for (const auto& m : adjoint_monos())
        r = r / one_minus(mono_mul(m, mono_atom(AQ, -two_s)));
    return r;
}

SymRat l_sym3(int two_s, int twist) {
    SymRat r = SymRat::integer(1);
    for (const auto& m : sym3_monos()) {
        SymRat root = SymRat::from_mono(mono_mul(m, mono_atom(AQ, -two_s)));
        if (twist < 0) root = -root;
        r = r / (SymRat::integer(1) - root);
    }
    return r;
}

SatakeData SatakeData::make(int c) {
    if (c < 0 || c > 2) throw std::invalid_argument("twist parameter must be 0, 1 or 2");
    SatakeData s;
    s.c = c;
    s.d = central_degree(c);
    s.subs = compile_substitutions(default_char_constraints());
    s.cp = make_c_function(s.subs.chi_plus[0], s.subs.chi_plus[1], +1, s.d);
    s.cm = make_c_function(s.subs.chi_minus[0], s.subs.chi_minus[1], -1, s.d);
    s.cpv = make_c_function(s.subs.chi_plus_dual[0], s.subs.chi_plus_dual[1], -1, s.d);
    s.cmv = make_c_function(s.subs.chi_minus_dual[0], s.subs.chi_minus_dual[1], +1, s.d);
    s.zz = s.subs.zz_plus_minus(s.d);
    s.zz_dual = mono_pow(s.zz, -1);
    s.branch = mono_mul(s.subs.chi_plus[0], s.subs.chi_minus[1]);
    return s;
}

std::array<SymMono, 4> psi_ratios(const SatakeData& s) {
    auto scale = mono_mul(mono_atom(AQ, -1), s.branch);
    std::array<SymMono, 4> r;
    int i = 0;
    for (const auto& m : sym3_monos()) r[i++] = mono_mul(scale, m);
    // order {B, A, f3, f4} by construction; swap to {A, B, f3, f4}
    std::swap(r[0], r[1]);
    return r;
}

SymPoly psi_series(const SatakeData& s, bool dual, int n) {
    const CFunction& ca = dual ? s.cpv : s.cp;
    const CFunction& cb = dual ? s.cmv : s.cm;
    const SymMono& zz = dual ? s.zz_dual : s.zz;
    const Atom var = dual ? AT2 : AT1;

    SymPoly total;
    long mmax = 2L * n + 8;
    for (long m = 0; m <= mmax; ++m) {
        for (long j = 0; j < (s.d == 3 ? 3 : 1); ++j) {
            CValue va = ca.value(-j, -m - j);
            CValue vb = cb.value(-j, -m - j);
            if (va.is_zero() || vb.is_zero()) continue;
            SymRat pp = pair_product(va, vb, zz);
            SymMono w{};
            w[AQ] = static_cast<int>(-3 * m);
            w[AT1] = static_cast<int>(dual ? -(m + j) : (m + j));
            w[AT2] = static_cast<int>(dual ? -j : j);
            SymRat term = SymRat::from_mono(w) * pp;
            total = total + term.num;
        }
    }
    return trunc_var(total, var, n);
}

SymRat psi_closed(const SatakeData& s, bool dual) {
    auto r = psi_ratios(s);
    const SymMono& g1 = dual ? r[2] : r[0];  // A resp. f3
    const SymMono& g2 = dual ? r[3] : r[1];  // B resp. f4
    SymPoly num = SymPoly(1) - SymPoly::monomial(mono_pow(g1, 2));
    SymPoly den = (one_minus(g1).num) * (one_minus(g2).num);
    return SymRat(num, den);
}

SymRat unramified_coperiod(const SatakeData& s) {
    return psi_closed(s, false) * psi_closed(s, true) * zeta_q(2).inverse();
}

SymRat coperiod_rhs(const SatakeData& s) {
    SymRat r = l_adjoint(2).inverse();
    for (const auto& f : psi_ratios(s)) r = r / one_minus(f);
    return r;
}

bool verify_coperiod_identity(const SatakeData& s) {
    return eq_crossmul(unramified_coperiod(s), coperiod_rhs(s));
}

SymPoly reduce_torsion3(const SymPoly& p) {
    SymPoly r;
    for (const auto& [m0, c] : p.terms()) {
        if (m0[AU] != 0)
            throw std::domain_error("reduce_torsion3: branch unit not substituted");
        SymMono m = m0;
        long k = floordiv(m[AT2], 3);
        m[AT2] -= static_cast<int>(3 * k);
        m[AT1] -= static_cast<int>(3 * k);
        r.add_term(m, c);
    }
    return r;
}

SymRat specialize_branch(const SymRat& x, int u_sign) {
    if (u_sign != 1 && u_sign != -1) throw std::invalid_argument("branch sign must be +-1");
    SymRat uval = SymRat::integer(u_sign);
    std::array<const SymRat*, kAtoms> repl{};
    repl[AU] = &uval;
    SymRat y = subst(x, repl);
    return SymRat(reduce_torsion3(y.num), reduce_torsion3(y.den));
}

bool eq_mod_torsion3(const SymRat& x, const SymRat& y) {
    return reduce_torsion3(reduce_gauss(x.num * y.den)) ==
           reduce_torsion3(reduce_gauss(y.num * x.den));
}

SymMono eisenstein_branch_requirement(const SubstitutionTable& t) {
    // theta = delta^{1/2} contributes (Q^{-1})^3 at pi^3; the product
    // with the two second character slots must be |pi^3|^{1/6} = Q^{-1}.
    SymMono lhs = mono_mul(mono_atom(AQ, -3), mono_mul(t.chi_plus[1], t.chi_minus[1]));
    return mono_mul(lhs, mono_atom(AQ, 1));  // the monomial required to be 1
}

SymRat eisenstein_specialize(const SymRat& psi) {
    SymRat t1v = SymRat::from_mono(mono_mul(mono_atom(AQ, -1), mono_atom(AX)));
    SymRat t2v = SymRat::from_mono(mono_mul(mono_atom(AQ), mono_atom(AX, -1)));
    SymRat uv = SymRat::integer(1);
    std::array<const SymRat*, kAtoms> repl{};
    repl[AT1] = &t1v;
    repl[AT2] = &t2v;
    repl[AU] = &uv;
    return subst(psi, repl);
}

SymRat eisenstein_zeta_quotient() {
    auto zx = [](int qe, int xe) {
        SymMono m = mono_atom(AQ, -qe);
        m[AX] = xe;
        return one_minus(m).inverse();
    };
    // zeta(1+s) zeta(2+3s) / zeta(2+2s)
    return zx(2, 1) * zx(4, 3) / zx(4, 2);
}

TorusIntegralConstants torus_integral_constants() {
    TorusIntegralConstants c;
    c.zeta2_over_zeta1 = zeta_q(4) / zeta_q(2);
    c.lower_unip_tail = SymRat::from_atom(AQ, -2);
    return c;
}

SymRat psi_series_whittaker_route(const SatakeData& s, int n) {
    SymPoly total;
    long amax = 2L * n + 8;
    for (long a = 0; a <= amax; ++a) {
        for (long j = 0; j < (s.d == 3 ? 3 : 1); ++j) {
            CValue wa = spherical_whittaker(s.cp, a + j, j);
            CValue wb = spherical_whittaker(s.cm, a + j, j);
            if (wa.is_zero() || wb.is_zero()) continue;
            SymRat pp = pair_product(wa, wb, s.zz);
            SymMono w{};
            w[AQ] = static_cast<int>(a);  // q^a against the modulus Q^{-a}
            w[AT1] = static_cast<int>(a + j);
            w[AT2] = static_cast<int>(j);
            SymRat term = SymRat::from_mono(w) * pp;
            total = total + term.num;
        }
    }
    auto cst = torus_integral_constants();
    SymRat route = cst.zeta2_over_zeta1 * (SymRat::integer(1) + cst.lower_unip_tail);
    return route * SymRat(trunc_var(total, AT1, n));
}

}  // namespace cubic
