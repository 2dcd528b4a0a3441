#include "cubic/arch.hpp"

#include <cmath>
#include <stdexcept>

namespace cubic {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double shift_a(const ArchParams& pr) { return pr.t + std::abs(pr.ell) / 2.0; }
double shift_b(const ArchParams& pr) { return -pr.t + std::abs(pr.ell) / 2.0; }

}  // namespace

double zeta_c(double s) {
    if (s <= 0.0) throw std::domain_error("zeta_c: argument must be positive");
    return 2.0 * std::pow(kTwoPi, -s) * std::tgamma(s);
}

double gamma_triplication_residual(double z) {
    if (z <= 0.0) throw std::domain_error("gamma_triplication_residual: z must be positive");
    double lhs = std::tgamma(z) * std::tgamma(z + 1.0 / 3.0) * std::tgamma(z + 2.0 / 3.0);
    double rhs = kTwoPi * std::pow(3.0, 0.5 - 3.0 * z) * std::tgamma(3.0 * z);
    return std::fabs(1.0 - lhs / rhs);
}

double l_adjoint_arch(const ArchParams& pr) {
    double a = shift_a(pr), b = shift_b(pr);
    return zeta_c(1.0) * zeta_c(1.0 + 2.0 * a) * zeta_c(1.0 + 2.0 * b);
}

double l_sym3_arch(const ArchParams& pr) {
    double a = shift_a(pr), b = shift_b(pr);
    return zeta_c(0.5 + 3.0 * a) * zeta_c(0.5 + a) * zeta_c(0.5 + b) * zeta_c(0.5 + 3.0 * b);
}

double l_adjoint_exceptional() {
    return zeta_c(1.0) * zeta_c(4.0 / 3.0) * zeta_c(2.0 / 3.0);
}

double l_triple_arch(const ArchParams& pr) {
    double prod = 1.0;
    for (double e1 : {shift_a(pr), shift_b(pr)})
        for (double e2 : {1.0 / 6.0, -1.0 / 6.0})
            for (double e3 : {1.0 / 6.0, -1.0 / 6.0}) prod *= zeta_c(0.5 + e1 + e2 + e3);
    return prod;
}

double coperiod_ratio_arch(const ArchParams& pr) { return l_sym3_arch(pr) / l_adjoint_arch(pr); }

namespace {

double rhs_with_prefactor(const ArchParams& pr, double pref) {
    double exc = l_adjoint_exceptional();
    double core = zeta_c(2.0) * zeta_c(2.0) * l_triple_arch(pr) /
                  (l_adjoint_arch(pr) * exc * exc);
    return pref * std::pow(3.0, 3.0 * std::abs(pr.ell)) * core;
}

}  // namespace

double coperiod_rhs_arch(const ArchParams& pr) { return rhs_with_prefactor(pr, 1.0 / 27.0); }

double coperiod_rhs_arch_displayed(const ArchParams& pr) {
    return rhs_with_prefactor(pr, 1.0 / (kTwoPi * kTwoPi));
}

double coperiod_residual_arch(const ArchParams& pr) {
    return std::fabs(1.0 - coperiod_rhs_arch(pr) / coperiod_ratio_arch(pr));
}

double coperiod_residual_arch_displayed(const ArchParams& pr) {
    return std::fabs(1.0 - coperiod_rhs_arch_displayed(pr) / coperiod_ratio_arch(pr));
}

}  // namespace cubic
