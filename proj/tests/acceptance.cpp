// Acceptance gate.  Each criterion prints exactly one verdict line
//   [PASS] criterion N: ...
//   [FAIL] criterion N: ...
// optionally preceded by "  note:" diagnostics, and the process exits
// nonzero if any executed criterion failed.  Run a single criterion
// with --criterion N.  All tolerances are the named constants below.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cubic/arch.hpp"
#include "cubic/coperiod.hpp"
#include "cubic/cover.hpp"
#include "cubic/ktypes.hpp"
#include "cubic/matrix.hpp"
#include "cubic/whittaker.hpp"

namespace {

using namespace cubic;

constexpr double kGaussTol = 1e-12;        // numeric gauss sum residuals
constexpr double kNumericTol = 1e-9;       // numeric whittaker consistency
constexpr double kTriplicationTol = 1e-9;  // gamma triplication residual
constexpr double kArchIdentityTol = 1e-8;  // real place ratio identity
constexpr double kKtypeBudgetSec = 60.0;   // enumeration wall clock budget
constexpr int kSeriesOrder = 20;           // criterion 2 truncation
constexpr int kInnerDepth = 30;            // criterion 3 class depth
constexpr int kPairTrials = 10000;         // criteria 4 and 5 sample count

std::mt19937_64 seeded(unsigned long long s) { return std::mt19937_64(s); }

PAdicElem random_elem(const PrimeContext& ctx, std::mt19937_64& rng, long vmin = -3,
                      long vmax = 3) {
    std::uniform_int_distribution<long> vd(vmin, vmax);
    std::uniform_int_distribution<long> ud(1, ctx.pow(ctx.max_digits()) - 1);
    for (;;) {
        long u = ud(rng);
        if (u % ctx.p() != 0) return PAdicElem(ctx, vd(rng), u, ctx.max_digits());
    }
}

Mat2 random_mat(const PrimeContext& ctx, std::mt19937_64& rng) {
    for (;;) {
        Mat2 g{random_elem(ctx, rng), random_elem(ctx, rng), random_elem(ctx, rng),
               random_elem(ctx, rng)};
        try {
            if (!mat_det(ctx, g).is_zero()) return g;
        } catch (const PrecisionExhausted&) {
        }
    }
}

Mat2 random_k(const PrimeContext& ctx, std::mt19937_64& rng) {
    for (;;) {
        Mat2 g{random_elem(ctx, rng, 0, 2), random_elem(ctx, rng, 0, 2),
               random_elem(ctx, rng, 0, 2), random_elem(ctx, rng, 0, 2)};
        try {
            if (in_gl2o(ctx, g)) return g;
        } catch (const PrecisionExhausted&) {
        }
    }
}

// 1. The local identity: exact in the atom ring for every twist, and
// the two branch specializations.  The branch value -1 clause requires
// the untwisted quotient sym3(1) / (sym3(1/2) adjoint(1)); the
// computation produces the twisted sym3 instead, so this clause fails
// and the criterion reports it.
bool criterion1(std::string& what) {
    bool exact = true, plus = true;
    for (int c : {0, 1, 2}) {
        SatakeData s = SatakeData::make(c);
        exact = exact && verify_coperiod_identity(s);
        plus = plus && eq_mod_torsion3(specialize_branch(unramified_coperiod(s), +1),
                                       l_sym3(1) / l_adjoint(2));
    }
    SatakeData s0 = SatakeData::make(0);
    SymRat minus_lhs = specialize_branch(unramified_coperiod(s0), -1);
    bool minus_untw = eq_mod_torsion3(minus_lhs, l_sym3(2) / (l_sym3(1) * l_adjoint(2)));
    bool minus_tw = eq_mod_torsion3(minus_lhs, l_sym3(1, -1) / l_adjoint(2));
    std::printf("  note: identity exact for c=0,1,2: %s\n", exact ? "yes" : "no");
    std::printf("  note: branch +1 equals sym3(1/2)/adjoint(1) mod torsion: %s\n",
                plus ? "yes" : "no");
    std::printf("  note: branch -1 equals untwisted sym3(1)/(sym3(1/2) adjoint(1)): %s\n",
                minus_untw ? "yes" : "no");
    std::printf("  note: branch -1 equals twisted sym3(1/2)/adjoint(1): %s\n",
                minus_tw ? "yes" : "no");
    what = minus_untw ? "identity and both branch values hold"
                      : "branch -1 clause fails; the twisted quotient matches instead";
    return exact && plus && minus_untw;
}

// 2. The torus sum against its closed form, primal and dual, exactly.
bool criterion2(std::string& what) {
    bool ok = true;
    for (int c : {0, 1, 2}) {
        SatakeData s = SatakeData::make(c);
        ok = ok && (psi_series(s, false, kSeriesOrder) ==
                    series_expand(psi_closed(s, false), AT1, kSeriesOrder));
        ok = ok && (psi_series(s, true, kSeriesOrder) ==
                    series_expand(psi_closed(s, true), AT2, kSeriesOrder));
    }
    std::ostringstream os;
    os << "series and closed form agree to order " << kSeriesOrder
       << " for both ends, c=0,1,2" << (ok ? "" : ": MISMATCH");
    what = os.str();
    return ok;
}

// 3. Inner product at class depth 30: exact closed form, and the
// truncation tail is numerically below 7^{-30}.
bool criterion3(std::string& what) {
    SatakeData s = SatakeData::make(0);
    SymRat tail_mono = SymRat::from_mono(mono_atom(AQ, -4 * kInnerDepth - 4));
    SymRat closed = zeta_q(2) * (SymRat::integer(1) - tail_mono);
    bool exact = eq_crossmul(whittaker_inner(s.cp, s.cpv, mono_one(), kInnerDepth), closed) &&
                 eq_crossmul(whittaker_inner(s.cm, s.cmv, mono_one(), kInnerDepth), closed);
    PrimeContext ctx(7);
    auto vals = numeric_atom_values(ctx, {0.3, 0.1}, {0.2, -0.4}, {1.0, 0.0});
    double tail = std::abs(eval_rat(zeta_q(2), vals)) *
                  std::pow(static_cast<double>(ctx.p()), -2.0 * (kInnerDepth + 1));
    double bound = std::pow(static_cast<double>(ctx.p()), -static_cast<double>(kInnerDepth));
    std::printf("  note: numeric tail %.3e against bound %.3e\n", tail, bound);
    std::ostringstream os;
    os << "inner product at depth " << kInnerDepth << (exact ? " matches" : " MISMATCHES")
       << " zeta(1)(1 - Q^{-124}); tail " << (tail <= bound ? "within" : "exceeds") << " 7^{-30}";
    what = os.str();
    return exact && tail <= bound;
}

// 4. The section over the maximal compact is a homomorphism on 10^4
// sampled pairs for every twist.
bool criterion4(std::string& what) {
    PrimeContext ctx(7);
    auto rng = seeded(41);
    long fails = 0, rejects = 0;
    for (int i = 0; i < kPairTrials; ++i) {
        Mat2 k1 = random_k(ctx, rng), k2 = random_k(ctx, rng);
        for (int c : {0, 1, 2}) {
            try {
                CoverElem prod =
                    cover_mul(ctx, kubota_splitting(ctx, k1, c), kubota_splitting(ctx, k2, c), c);
                if (prod.z != kubota_splitting(ctx, prod.g, c).z) ++fails;
            } catch (const PrecisionExhausted&) {
                ++rejects;
            }
        }
    }
    std::ostringstream os;
    os << kPairTrials << " pairs, c=0,1,2: " << fails << " failures, " << rejects
       << " precision rejects";
    what = os.str();
    return fails == 0;
}

// 5. The cocycle identity on 10^4 sampled triples for every twist.
bool criterion5(std::string& what) {
    PrimeContext ctx(7);
    auto rng = seeded(52);
    long fails = 0, rejects = 0;
    for (int i = 0; i < kPairTrials; ++i) {
        Mat2 g1 = random_mat(ctx, rng), g2 = random_mat(ctx, rng), g3 = random_mat(ctx, rng);
        for (int c : {0, 1, 2}) {
            try {
                Mu3 lhs = kubota_cocycle(ctx, g1, g2, c) +
                          kubota_cocycle(ctx, mat_mul(ctx, g1, g2), g3, c);
                Mu3 rhs = kubota_cocycle(ctx, g2, g3, c) +
                          kubota_cocycle(ctx, g1, mat_mul(ctx, g2, g3), c);
                if (lhs != rhs) ++fails;
            } catch (const PrecisionExhausted&) {
                ++rejects;
            }
        }
    }
    std::ostringstream os;
    os << kPairTrials << " triples, c=0,1,2: " << fails << " failures, " << rejects
       << " precision rejects";
    what = os.str();
    return fails == 0;
}

// 6. Numeric cubic gauss sums at the three supported primes.
bool criterion6(std::string& what) {
    double worst = 0.0;
    for (long p : {7L, 13L, 19L}) {
        PrimeContext ctx(p);
        auto g0 = gauss_sum_numeric(ctx, 0);
        auto g1 = gauss_sum_numeric(ctx, 1);
        auto g2 = gauss_sum_numeric(ctx, 2);
        worst = std::max(worst, std::abs(g0 - std::complex<double>(-1.0, 0.0)));
        worst = std::max(worst, std::fabs(std::norm(g1) - static_cast<double>(p)));
        worst = std::max(worst, std::abs(std::conj(g1) - g2));
        worst = std::max(worst, std::abs(g1 * g2 - std::complex<double>(static_cast<double>(p), 0.0)));
    }
    std::ostringstream os;
    os << "p=7,13,19 worst residual " << worst << " against " << kGaussTol;
    what = os.str();
    return worst < kGaussTol;
}

// 7. Whittaker coefficients: the eight frozen families exactly, then
// numeric consistency of the family step and of the paired torus sum.
bool criterion7(std::string& what) {
    auto family_mono = [](int which, int n) {
        SymMono m = mono_one();
        switch (which) {
            case 0: m = mono_mul(mono_atom(AQ, 5 * n), mono_pow(mono_atom(AU, 1), n)); break;
            case 1:
                m = mono_mul(mono_mul(mono_atom(AQ, 5 * n + 1), mono_atom(AG2, 1)),
                             mono_pow(mono_atom(AU, 1), n + 1));
                break;
            case 2: m = mono_atom(AQ, 3 * n); break;
            case 3: m = mono_mul(mono_atom(AQ, 3 * n - 1), mono_atom(AGB2, 1)); break;
            case 4: m = mono_mul(mono_atom(AQ, 3 * n), mono_pow(mono_atom(AU, 1), -n)); break;
            case 5:
                m = mono_mul(mono_mul(mono_atom(AQ, 3 * n - 1), mono_atom(AGB2, 1)),
                             mono_pow(mono_atom(AU, 1), -n - 1));
                break;
            case 6: m = mono_atom(AQ, 5 * n); break;
            default:
                m = mono_mul(mono_atom(AQ, 5 * n + 1), mono_atom(AG2, 1));
                break;
        }
        return m;
    };
    bool exact = true;
    for (int c : {0, 1, 2}) {
        SatakeData s = SatakeData::make(c);
        const CFunction* tabs[4] = {&s.cp, &s.cm, &s.cpv, &s.cmv};
        for (int t = 0; t < 4; ++t)
            for (int n = 0; n <= 3; ++n) {
                CValue first = tabs[t]->value(0, -3 * n);
                CValue second = tabs[t]->value(-1, -3 * n - 2);
                exact = exact && eq_crossmul(first.v, SymRat::from_mono(family_mono(2 * t, n))) &&
                        first.central == 0;
                exact = exact &&
                        eq_crossmul(second.v, SymRat::from_mono(family_mono(2 * t + 1, n))) &&
                        second.central == 0;
            }
    }

    // numeric: the step between consecutive family members is Q^5 u for
    // the plus table, and the depth-6 paired sum meets its closed form
    PrimeContext ctx(7);
    SatakeData s0 = SatakeData::make(0);
    double worst = 0.0;
    for (auto pt : std::vector<std::array<std::complex<double>, 3>>{
             {{{0.3, 0.1}, {0.2, -0.4}, {1.0, 0.0}}},
             {{{-0.1, 0.55}, {0.4, 0.2}, {0.0, 1.0}}}}) {
        auto vals = numeric_atom_values(ctx, pt[0], pt[1], pt[2]);
        std::complex<double> step = eval_rat(SymRat::from_mono(mono_mul(mono_atom(AQ, 5),
                                                                        mono_atom(AU, 1))),
                                             vals);
        for (int n = 0; n <= 2; ++n) {
            auto lo = eval_rat(s0.cp.value(0, -3 * n).v, vals);
            auto hi = eval_rat(s0.cp.value(0, -3 * (n + 1)).v, vals);
            worst = std::max(worst, std::abs(hi / lo - step));
        }
        auto sum = eval_rat(whittaker_inner(s0.cp, s0.cpv, mono_one(), 6), vals);
        auto closed = eval_rat(zeta_q(2) * (SymRat::integer(1) -
                                            SymRat::from_mono(mono_atom(AQ, -28))),
                               vals);
        worst = std::max(worst, std::abs(sum - closed));
    }
    std::printf("  note: worst numeric residual %.3e\n", worst);
    std::ostringstream os;
    os << "frozen families " << (exact ? "exact" : "MISMATCH") << "; numeric consistency "
       << (worst < kNumericTol ? "within" : "exceeds") << " 1e-9";
    what = os.str();
    return exact && worst < kNumericTol;
}

// 8. Finite enumerations against the closed dimension tables, within
// the wall clock budget.
bool criterion8(std::string& what) {
    auto t0 = std::chrono::steady_clock::now();
    PrimeContext ctx(7);
    long mism = 0, cases = 0;
    for (int c : {0, 1, 2}) {
        for (int ml : {1, 2})
            for (int mr : {1, 2})
                for (int la = 0; la < 3; ++la)
                    for (int lb = 0; lb < 3; ++lb)
                        for (int ra = 0; ra < 3; ++ra)
                            for (int rb = 0; rb < 3; ++rb) {
                                CharLine l{la, lb}, r{ra, rb};
                                ++cases;
                                if (intertwining_dim(ctx, ml, mr, l, r, c) !=
                                    intertwining_dim_table(ml, mr, l, r, c))
                                    ++mism;
                            }
        for (int m : {1, 2, 3})
            for (K1Pair pr : {K1Pair::LevelLevel, K1Pair::LevelStair, K1Pair::StairStair})
                for (int la = 0; la < 3; ++la)
                    for (int lb = 0; lb < 3; ++lb)
                        for (int ra = 0; ra < 3; ++ra)
                            for (int rb = 0; rb < 3; ++rb) {
                                CharLine l{la, lb}, r{ra, rb};
                                ++cases;
                                if (k1_intertwining_dim(ctx, m, l, r, c, pr) !=
                                    k1_intertwining_dim_table(m, l, r, c, pr))
                                    ++mism;
                            }
        for (int m = 1; m <= 4; ++m) {
            ++cases;
            if (!level_consistency(m, c)) ++mism;
        }
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << cases << " enumerated cases, " << mism << " mismatches, " << sec << "s of "
       << kKtypeBudgetSec << "s budget";
    what = os.str();
    return mism == 0 && sec < kKtypeBudgetSec;
}

// 9. Real place: triplication residuals over a sampled window and the
// ratio identity at pinned parameters.  The residual of the variant
// prefactor (2pi)^{-2} is printed for the record; it is a constant and
// is not part of the pass condition.
bool criterion9(std::string& what) {
    auto rng = seeded(93);
    std::uniform_real_distribution<double> dz(0.1, 2.0);
    double worst_trip = 0.0;
    for (int i = 0; i < 20; ++i)
        worst_trip = std::max(worst_trip, gamma_triplication_residual(dz(rng)));
    double worst_id = 0.0;
    for (ArchParams pr : {ArchParams{0.0, 0}, ArchParams{0.1, 2}, ArchParams{-0.05, 1}})
        worst_id = std::max(worst_id, coperiod_residual_arch(pr));
    std::printf("  note: variant prefactor residual at (0,0): %.6f (constant |1-27/(2pi)^2|)\n",
                coperiod_residual_arch_displayed(ArchParams{0.0, 0}));
    std::ostringstream os;
    os << "triplication worst " << worst_trip << ", identity worst " << worst_id;
    what = os.str();
    return worst_trip < kTriplicationTol && worst_id < kArchIdentityTol;
}

// 10. Reproducibility of the command line tool: identical bytes on
// repeated runs with the same arguments.
bool criterion10(std::string& what) {
    auto slurp = [](const char* path) {
        std::ifstream f(path, std::ios::binary);
        std::ostringstream os;
        os << f.rdbuf();
        return os.str();
    };
    auto shell = [](const std::string& cmd) {
        int raw = std::system(cmd.c_str());
        return (raw == -1) ? -1 : WEXITSTATUS(raw);
    };
    std::string bin = std::string("\"") + CUBICOVER_BIN + "\"";
    int e1 = shell(bin + " verify all --seed 3 --out /tmp/acc_rep1.json > /dev/null 2>&1");
    int e2 = shell(bin + " verify all --seed 3 --out /tmp/acc_rep2.json > /dev/null 2>&1");
    std::string r1 = slurp("/tmp/acc_rep1.json"), r2 = slurp("/tmp/acc_rep2.json");
    int t1 = shell(bin + " table whittaker --c 1 > /tmp/acc_tab1.txt 2>&1");
    int t2 = shell(bin + " table whittaker --c 1 > /tmp/acc_tab2.txt 2>&1");
    std::string w1 = slurp("/tmp/acc_tab1.txt"), w2 = slurp("/tmp/acc_tab2.txt");
    bool ok = e1 == e2 && e1 == 1 && !r1.empty() && r1 == r2 && t1 == 0 && t2 == 0 &&
              !w1.empty() && w1 == w2;
    std::ostringstream os;
    os << "verify all twice: exit " << e1 << "/" << e2 << ", " << r1.size() << "/" << r2.size()
       << " bytes, " << (r1 == r2 ? "identical" : "DIFFER") << "; table twice: "
       << (w1 == w2 ? "identical" : "DIFFER");
    what = os.str();
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

    bool (*crits[10])(std::string&) = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                       criterion6, criterion7, criterion8, criterion9, criterion10};
    int failures = 0, ran = 0;
    for (int n = 1; n <= 10; ++n) {
        if (only != 0 && n != only) continue;
        std::string what;
        bool ok = crits[n - 1](what);
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
        ++ran;
        if (!ok) ++failures;
    }
    if (ran == 0) {
        std::fprintf(stderr, "no such criterion\n");
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
