#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubic/symrat.hpp"

namespace cubic {

/*
 * The two unramified characters chi_+ = (chi_+1, chi_+2) and
 * chi_- = (chi_-1, chi_-2) entering the spherical data are pinned only
 * up to a gauge by multiplicative constraints among their values at
 * pi^3.  Rather than hard-coding one solution, the constraints are
 * compiled: each unknown is an exponent vector over the ring atoms, a
 * constraint says an integer combination of unknowns equals a fixed
 * monomial, and Gaussian elimination over Q produces the unique
 * integral solution or explains why there is none.
 */

struct CharConstraint {
    // sum_i lhs[i] * log(unknown_i) = log(rhs), unknowns ordered
    // (chi_+1, chi_+2, chi_-1, chi_-2), all values at pi^3.
    std::array<Rational, 4> lhs;
    SymMono rhs;
    std::string name;
};

std::vector<CharConstraint> default_char_constraints();

struct SubstitutionTable {
    std::array<SymMono, 2> chi_plus;        // (chi_+1, chi_+2)(pi^3)
    std::array<SymMono, 2> chi_minus;       // (chi_-1, chi_-2)(pi^3)
    std::array<SymMono, 2> chi_plus_dual;   // inverse-swapped pair
    std::array<SymMono, 2> chi_minus_dual;

    // Product of a central value from the plus table with one from the
    // minus table, for a cover with center generated in degree d.
    SymMono zz_plus_minus(int d) const;
};

// Throws std::domain_error naming the offending constraint when the
// system is inconsistent, does not pin all four unknowns, or forces a
// fractional exponent.
SubstitutionTable compile_substitutions(const std::vector<CharConstraint>& cs);

}  // namespace cubic
