#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubic/padic.hpp"

using namespace cubic;

namespace {

PAdicElem random_elem(const PrimeContext& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> vd(-3, 3);
    std::uniform_int_distribution<long> ud(1, ctx.pow(ctx.max_digits()) - 1);
    for (;;) {
        long u = ud(rng);
        if (u % ctx.p() != 0) return PAdicElem(ctx, vd(rng), u, ctx.max_digits());
    }
}

}  // namespace

TEST_CASE("prime context pins the mu_3 identification") {
    PrimeContext c7(7);
    CHECK(c7.gen() == 3);
    CHECK(c7.omega() == 2);
    // The identification iota on {1, omega, omega^2} = {1, 2, 4} sends
    // omega -> 1.  residue_class(r) = iota(r^2 mod 7), so
    // residue_class(2) = iota(4) = 2 and residue_class(4) = iota(2) = 1.
    CHECK(c7.residue_class(2) == Mu3(2));
    CHECK(c7.residue_class(4) == Mu3(1));
    CHECK(c7.residue_class(3) == Mu3(1));
    CHECK(c7.residue_class(1) == Mu3(0));
    CHECK(c7.residue_class(6) == Mu3(0));  // -1 is a cube mod 7

    CHECK_THROWS_AS(PrimeContext(11), std::invalid_argument);  // 11 = 2 mod 3
    CHECK_THROWS_AS(PrimeContext(9), std::invalid_argument);
}

TEST_CASE("cubic residue and hilbert symbol frozen values") {
    PrimeContext c7(7);
    auto three = PAdicElem::from_int(c7, 3);
    auto seven = PAdicElem::from_int(c7, 7);
    CHECK(cubic_residue(c7, three) == Mu3(1));
    CHECK(hilbert3(c7, three, seven) == Mu3(1));
    CHECK_THROWS_AS(cubic_residue(c7, seven), std::domain_error);

    // (pi, pi) = class(-1) = 0 whenever (p-1)/3 is even.
    for (long p : {7L, 13L, 19L}) {
        PrimeContext ctx(p);
        auto pi = PAdicElem::uniformizer(ctx);
        CHECK(hilbert3(ctx, pi, pi) == Mu3(0));
    }
}

TEST_CASE("addition tracks valuation and precision") {
    PrimeContext ctx(7, 6);
    auto a = PAdicElem(ctx, 0, 1, 6);
    auto b = PAdicElem(ctx, 2, 3, 6);
    auto s = padd(ctx, a, b);  // 1 + 3*49 = 148
    CHECK(s.val() == 0);
    CHECK(s.prec() == 6);
    CHECK(s.unit() == 148);

    // Carry into the valuation: 3 + 4 = 7.
    auto t = padd(ctx, PAdicElem::from_int(ctx, 3), PAdicElem::from_int(ctx, 4));
    CHECK(t.val() == 1);
    CHECK(t.unit() == 1);
    CHECK(t.prec() == 5);  // one digit consumed by the carry

    // Exact cancellation is a precision failure, not zero.
    CHECK_THROWS_AS(padd(ctx, a, pneg(ctx, a)), PrecisionExhausted);

    // A term shifted entirely past the window is invisible.
    auto tiny = PAdicElem(ctx, 6, 5, 6);
    CHECK(peq(ctx, padd(ctx, a, tiny), a));

    // A low-precision operand caps the result: the other term falls
    // inside its error band and is absorbed.
    auto lowprec = PAdicElem(ctx, -2, 1, 2);
    auto capped = padd(ctx, lowprec, PAdicElem(ctx, 1, 1, 6));
    CHECK(capped.prec() == 2);
    CHECK(peq(ctx, capped, lowprec));
}

TEST_CASE("field axioms on random samples") {
    for (long p : {7L, 13L, 19L}) {
        PrimeContext ctx(p, 6);
        std::mt19937_64 rng(20240 + p);
        int skipped = 0;
        for (int i = 0; i < 1200; ++i) {
            auto x = random_elem(ctx, rng), y = random_elem(ctx, rng), z = random_elem(ctx, rng);
            CHECK(peq(ctx, pmul(ctx, x, y), pmul(ctx, y, x)));
            CHECK(peq(ctx, pmul(ctx, pmul(ctx, x, y), z), pmul(ctx, x, pmul(ctx, y, z))));
            CHECK(peq(ctx, pmul(ctx, x, pinv(ctx, x)), PAdicElem::one(ctx)));
            try {
                auto l = padd(ctx, x, y);
                CHECK(peq(ctx, l, padd(ctx, y, x)));
                auto lhs = pmul(ctx, z, l);
                auto rhs = padd(ctx, pmul(ctx, z, x), pmul(ctx, z, y));
                CHECK(peq(ctx, lhs, rhs));
            } catch (const PrecisionExhausted&) {
                ++skipped;
            }
        }
        CHECK(skipped < 300);  // cancellations are rare under this sampler
    }
}

TEST_CASE("hilbert symbol axioms on random samples") {
    for (long p : {7L, 13L, 19L}) {
        PrimeContext ctx(p, 6);
        std::mt19937_64 rng(777 + p);
        int steinberg_checked = 0;
        for (int i = 0; i < 1500; ++i) {
            auto a = random_elem(ctx, rng), b = random_elem(ctx, rng), c = random_elem(ctx, rng);

            CHECK(hilbert3(ctx, pmul(ctx, a, b), c) == hilbert3(ctx, a, c) + hilbert3(ctx, b, c));
            CHECK(hilbert3(ctx, a, pmul(ctx, b, c)) == hilbert3(ctx, a, b) + hilbert3(ctx, a, c));
            CHECK(hilbert3(ctx, a, b) == -hilbert3(ctx, b, a));
            CHECK(hilbert3(ctx, a, pneg(ctx, a)) == Mu3(0));
            CHECK(hilbert3(ctx, pmul(ctx, pmul(ctx, a, a), a), b) == Mu3(0));
            if (a.is_unit() && b.is_unit()) CHECK(hilbert3(ctx, a, b) == Mu3(0));

            // Steinberg relation where 1 - a is representable.
            try {
                auto one_minus = psub(ctx, PAdicElem::one(ctx), a);
                CHECK(hilbert3(ctx, a, one_minus) == Mu3(0));
                ++steinberg_checked;
            } catch (const PrecisionExhausted&) {
            }
        }
        CHECK(steinberg_checked > 1000);
    }
}
