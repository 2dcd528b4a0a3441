#include "cubic/cyclo.hpp"

#include <stdexcept>

namespace cubic {

CycloCoeff CycloCoeff::inv() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("CycloCoeff::inv of zero");
    CycloCoeff c = conj();
    return CycloCoeff(c.a / n, c.b / n);
}

std::complex<double> CycloCoeff::embed() const {
    static const std::complex<double> z(-0.5, 0.8660254037844386467637231707529362);
    return std::complex<double>(a.convert_to<double>()) + b.convert_to<double>() * z;
}

std::string to_string(const CycloCoeff& c) {
    auto rat = [](const Rational& r) {
        std::string s = r.str();
        return s;
    };
    if (c.b == 0) return rat(c.a);
    std::string bs;
    if (c.b == 1)
        bs = "z3";
    else if (c.b == -1)
        bs = "-z3";
    else
        bs = rat(c.b) + "*z3";
    if (c.a == 0) return "(" + bs + ")";
    if (c.b > 0) return "(" + rat(c.a) + "+" + bs + ")";
    return "(" + rat(c.a) + bs + ")";
}

}  // namespace cubic
