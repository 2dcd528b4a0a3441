#include "cubic/chars.hpp"

#include <stdexcept>

namespace cubic {

std::vector<CharConstraint> default_char_constraints() {
    std::vector<CharConstraint> cs;
    auto q2inv = mono_atom(AQ, -2);

    cs.push_back({{Rational(1), Rational(-1), Rational(0), Rational(0)},
                  q2inv,
                  "plus pair ratio"});
    cs.push_back({{Rational(0), Rational(0), Rational(1), Rational(-1)},
                  q2inv,
                  "minus pair ratio"});
    cs.push_back({{Rational(1), Rational(0), Rational(0), Rational(1)},
                  mono_atom(AU),
                  "cross product branch unit"});
    cs.push_back({{Rational(0), Rational(0), Rational(0), Rational(1)},
                  mono_one(),
                  "minus gauge"});
    return cs;
}

SymMono SubstitutionTable::zz_plus_minus(int d) const {
    // The degree-3 value is the folded product of all four characters
    // at pi^3; smaller-degree centers take its consistent d/3 root.
    SymMono prod = mono_mul(mono_mul(chi_plus[0], chi_plus[1]),
                            mono_mul(chi_minus[0], chi_minus[1]));
    SymMono r{};
    for (int i = 0; i < kAtoms; ++i) {
        long scaled = static_cast<long>(prod[i]) * d;
        if (scaled % 3 != 0)
            throw std::domain_error("zz_plus_minus: central product has no degree-" +
                                    std::to_string(d) + " root");
        r[i] = static_cast<int>(scaled / 3);
    }
    return r;
}

SubstitutionTable compile_substitutions(const std::vector<CharConstraint>& cs) {
    const int kUnknowns = 4;
    struct Row {
        std::array<Rational, 4> a;
        std::array<Rational, kAtoms> r;
        std::string label;
    };

    std::vector<Row> rows;
    rows.reserve(cs.size());
    for (const auto& c : cs) {
        Row row;
        row.a = c.lhs;
        for (int i = 0; i < kAtoms; ++i) row.r[i] = Rational(c.rhs[i]);
        row.label = c.name;
        rows.push_back(std::move(row));
    }

    // Row echelon over Q, the nine right-hand coordinates riding along.
    int pivot_row = 0;
    std::array<int, 4> pivot_of{-1, -1, -1, -1};
    for (int col = 0; col < kUnknowns && pivot_row < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int i = pivot_row; i < static_cast<int>(rows.size()); ++i)
            if (rows[i].a[col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[pivot_row], rows[sel]);

        Rational p = rows[pivot_row].a[col];
        for (int j = 0; j < kUnknowns; ++j) rows[pivot_row].a[j] /= p;
        for (int j = 0; j < kAtoms; ++j) rows[pivot_row].r[j] /= p;

        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == pivot_row || rows[i].a[col] == 0) continue;
            Rational f = rows[i].a[col];
            for (int j = 0; j < kUnknowns; ++j) rows[i].a[j] -= f * rows[pivot_row].a[j];
            for (int j = 0; j < kAtoms; ++j) rows[i].r[j] -= f * rows[pivot_row].r[j];
        }
        pivot_of[col] = pivot_row;
        ++pivot_row;
    }

    for (int i = pivot_row; i < static_cast<int>(rows.size()); ++i) {
        bool rhs_zero = true;
        for (int j = 0; j < kAtoms; ++j) rhs_zero = rhs_zero && rows[i].r[j] == 0;
        if (!rhs_zero)
            throw std::domain_error("character constraints inconsistent near: " + rows[i].label);
    }
    for (int col = 0; col < kUnknowns; ++col)
        if (pivot_of[col] < 0)
            throw std::domain_error("character constraints leave unknown " +
                                    std::to_string(col + 1) + " free");

    std::array<SymMono, 4> sol;
    for (int col = 0; col < kUnknowns; ++col) {
        const Row& row = rows[pivot_of[col]];
        SymMono m{};
        for (int j = 0; j < kAtoms; ++j) {
            const Rational& v = row.r[j];
            if (denominator(v) != 1)
                throw std::domain_error("character constraints force a fractional exponent (" +
                                        row.label + ")");
            m[j] = static_cast<int>(static_cast<long>(numerator(v)));
        }
        fold_mono(m);
        sol[col] = m;
    }

    SubstitutionTable t;
    t.chi_plus = {sol[0], sol[1]};
    t.chi_minus = {sol[2], sol[3]};
    auto inv = [](const SymMono& m) {
        SymMono r{};
        for (int i = 0; i < kAtoms; ++i) r[i] = -m[i];
        fold_mono(r);
        return r;
    };
    t.chi_plus_dual = {inv(sol[1]), inv(sol[0])};
    t.chi_minus_dual = {inv(sol[3]), inv(sol[2])};
    return t;
}

}  // namespace cubic
