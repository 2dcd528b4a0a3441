#include "cubic/symrat.hpp"

#include <stdexcept>

namespace cubic {

namespace {

const char* kAtomName[kAtoms] = {"Q", "t1", "t2", "u", "X", "G1", "G2", "Gb1", "Gb2"};

// Folded grading in var: invariant under fold_mono, additive under
// multiplication, and for canonical monomials a monotone proxy for the
// var-degree (gdeg <= 2n covers every monomial with e[var] <= n).
long gdeg(const SymMono& m, Atom var) {
    if (var == AT1 || var == AT2) return 2L * m[var] - 3L * m[AU];
    return 2L * m[var];
}

}  // namespace

void fold_mono(SymMono& m) {
    int r = ((m[AU] % 2) + 2) % 2;
    int k = (m[AU] - r) / 2;
    if (k != 0) {
        m[AU] = r;
        m[AT1] -= 3 * k;
        m[AT2] -= 3 * k;
    }
}

SymMono mono_mul(const SymMono& x, const SymMono& y) {
    SymMono r;
    for (int i = 0; i < kAtoms; ++i) r[i] = x[i] + y[i];
    fold_mono(r);
    return r;
}

SymMono mono_pow(const SymMono& m, long k) {
    SymMono r;
    for (int i = 0; i < kAtoms; ++i) r[i] = static_cast<int>(m[i] * k);
    fold_mono(r);
    return r;
}

SymMono mono_one() {
    SymMono m{};
    return m;
}

SymMono mono_atom(Atom a, int e) {
    SymMono m{};
    m[a] = e;
    fold_mono(m);
    return m;
}

SymPoly::SymPoly(const CycloCoeff& c) {
    if (!c.is_zero()) t_[mono_one()] = c;
}

SymPoly SymPoly::monomial(const SymMono& m, const CycloCoeff& c) {
    SymPoly p;
    SymMono mm = m;
    fold_mono(mm);
    if (!c.is_zero()) p.t_[mm] = c;
    return p;
}

void SymPoly::add_term(const SymMono& m, const CycloCoeff& c) {
    if (c.is_zero()) return;
    SymMono mm = m;
    fold_mono(mm);
    auto it = t_.find(mm);
    if (it == t_.end()) {
        t_.emplace(mm, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

SymPoly operator+(const SymPoly& x, const SymPoly& y) {
    SymPoly r = x;
    for (const auto& [m, c] : y.t_) r.add_term(m, c);
    return r;
}

SymPoly operator-(const SymPoly& x, const SymPoly& y) {
    SymPoly r = x;
    for (const auto& [m, c] : y.t_) r.add_term(m, -c);
    return r;
}

SymPoly SymPoly::operator-() const {
    SymPoly r;
    for (const auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

SymPoly operator*(const SymPoly& x, const SymPoly& y) {
    SymPoly r;
    for (const auto& [mx, cx] : x.t_)
        for (const auto& [my, cy] : y.t_) r.add_term(mono_mul(mx, my), cx * cy);
    return r;
}

SymRat::SymRat(SymPoly n, SymPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("SymRat: zero denominator");
}

SymRat SymRat::from_atom(Atom a, int e) { return SymRat(SymPoly::monomial(mono_atom(a, e))); }
SymRat SymRat::from_mono(const SymMono& m) { return SymRat(SymPoly::monomial(m)); }

SymRat operator+(const SymRat& x, const SymRat& y) {
    return SymRat(x.num * y.den + y.num * x.den, x.den * y.den);
}
SymRat operator-(const SymRat& x, const SymRat& y) {
    return SymRat(x.num * y.den - y.num * x.den, x.den * y.den);
}
SymRat operator*(const SymRat& x, const SymRat& y) { return SymRat(x.num * y.num, x.den * y.den); }
SymRat operator/(const SymRat& x, const SymRat& y) { return x * y.inverse(); }
SymRat SymRat::operator-() const { return SymRat(-num, den); }

SymRat SymRat::inverse() const {
    if (num.is_zero()) throw std::domain_error("SymRat: inverse of zero");
    return SymRat(den, num);
}

SymRat SymRat::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    SymRat r = SymRat::integer(1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

SymPoly reduce_gauss(const SymPoly& p) {
    SymPoly r;
    for (const auto& [m0, c] : p.terms()) {
        SymMono m = m0;
        for (auto [g, gb] : {std::pair{AG1, AGB1}, std::pair{AG2, AGB2}}) {
            while (m[g] > 0 && m[gb] > 0) {
                --m[g];
                --m[gb];
                m[AQ] += 2;
            }
            while (m[g] < 0 && m[gb] < 0) {
                ++m[g];
                ++m[gb];
                m[AQ] -= 2;
            }
        }
        r.add_term(m, c);
    }
    return r;
}

bool eq_crossmul(const SymRat& x, const SymRat& y) {
    return reduce_gauss(x.num * y.den) == reduce_gauss(y.num * x.den);
}

SymPoly trunc_var(const SymPoly& p, Atom var, int n) {
    SymPoly r;
    for (const auto& [m, c] : p.terms())
        if (m[var] <= n) r.add_term(m, c);
    return r;
}

namespace {

SymPoly trunc_gdeg(const SymPoly& p, Atom var, long bound) {
    SymPoly r;
    for (const auto& [m, c] : p.terms())
        if (gdeg(m, var) <= bound) r.add_term(m, c);
    return r;
}

}  // namespace

SymPoly series_expand(const SymRat& x, Atom var, int n) {
    if (x.num.is_zero()) return SymPoly();

    // Leading monomial of the denominator in the folded grading.
    const auto& den = x.den.terms();
    long ming = 0;
    bool first = true;
    for (const auto& [m, c] : den) {
        long g = gdeg(m, var);
        if (first || g < ming) ming = g;
        first = false;
    }
    const SymMono* lead = nullptr;
    for (const auto& [m, c] : den) {
        if (gdeg(m, var) == ming) {
            if (lead) throw std::domain_error("series_expand: leading term not unique");
            lead = &m;
        }
    }

    // d0^{-1} as a monomial; h = 1 - den/d0 has strictly positive grading.
    SymMono d0inv;
    for (int i = 0; i < kAtoms; ++i) d0inv[i] = -(*lead)[i];
    fold_mono(d0inv);
    CycloCoeff c0inv = den.at(*lead).inv();
    SymPoly den_over = SymPoly::monomial(d0inv, c0inv) * x.den;
    SymPoly h = SymPoly(1) - den_over;
    for (const auto& [m, c] : h.terms())
        if (gdeg(m, var) <= 0)
            throw std::domain_error("series_expand: denominator not expandable in this variable");

    long min_num = 0;
    first = true;
    for (const auto& [m, c] : x.num.terms()) {
        long g = gdeg(m, var);
        if (first || g < min_num) min_num = g;
        first = false;
    }
    // Output monomials carry gdeg(num mono) - ming + gdeg(series mono);
    // everything that can land at gdeg <= 2n must be accumulated.
    long bound = 2L * n - min_num + ming;

    SymPoly series(1), acc(1);
    while (!acc.is_zero()) {
        acc = trunc_gdeg(acc * h, var, bound);
        series = series + acc;
    }

    SymPoly out = x.num * SymPoly::monomial(d0inv, c0inv) * series;
    return trunc_var(out, var, n);
}

SymRat subst(const SymRat& x, const std::array<const SymRat*, kAtoms>& repl) {
    auto subst_poly = [&](const SymPoly& p) -> SymRat {
        SymRat acc = SymRat(SymPoly(0));
        for (const auto& [m, c] : p.terms()) {
            SymMono keep{};
            SymRat factor = SymRat::constant(c);
            for (int i = 0; i < kAtoms; ++i) {
                if (m[i] == 0) continue;
                if (repl[i])
                    factor = factor * repl[i]->pow(m[i]);
                else
                    keep[i] = m[i];
            }
            acc = acc + factor * SymRat::from_mono(keep);
        }
        return acc;
    };
    SymRat n = subst_poly(x.num), d = subst_poly(x.den);
    return n / d;
}

std::complex<double> eval_poly(const SymPoly& p, const std::array<std::complex<double>, kAtoms>& v) {
    std::complex<double> s = 0;
    for (const auto& [m, c] : p.terms()) {
        std::complex<double> t = c.embed();
        for (int i = 0; i < kAtoms; ++i) {
            if (m[i] == 0) continue;
            std::complex<double> base = m[i] > 0 ? v[i] : 1.0 / v[i];
            for (int k = std::abs(m[i]); k > 0; --k) t *= base;
        }
        s += t;
    }
    return s;
}

std::complex<double> eval_rat(const SymRat& x, const std::array<std::complex<double>, kAtoms>& v) {
    return eval_poly(x.num, v) / eval_poly(x.den, v);
}

std::string to_string(const SymMono& m) {
    std::string s;
    for (int i = 0; i < kAtoms; ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += kAtomName[i];
        if (m[i] != 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const SymPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        if (!s.empty()) s += " + ";
        std::string cs = to_string(c);
        std::string ms = to_string(m);
        if (ms == "1")
            s += cs;
        else if (cs == "1")
            s += ms;
        else if (cs == "-1")
            s += "-" + ms;
        else
            s += cs + "*" + ms;
    }
    return s;
}

std::string to_string(const SymRat& x) {
    if (x.den == SymPoly(1)) return to_string(x.num);
    return "(" + to_string(x.num) + ") / (" + to_string(x.den) + ")";
}

}  // namespace cubic
