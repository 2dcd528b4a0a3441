#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubic/cover.hpp"

using namespace cubic;

namespace {

PAdicElem random_elem(const PrimeContext& ctx, std::mt19937_64& rng, long vmin = -3, long vmax = 3) {
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

}  // namespace

TEST_CASE("central degree") {
    CHECK(central_degree(0) == 3);
    CHECK(central_degree(1) == 3);
    CHECK(central_degree(2) == 1);
}

TEST_CASE("cocycle pinned values") {
    PrimeContext ctx(7);
    Mat2 w = mat_w(ctx);
    for (int c : {0, 1, 2}) CHECK(kubota_cocycle(ctx, w, w, c) == Mu3(0));

    auto pi = PAdicElem::uniformizer(ctx);
    Mat2 t = mat_diag(pi, PAdicElem::one(ctx));
    CHECK(kubota_cocycle(ctx, t, t, 0) == Mu3(0));

    // Unipotent part is split on the nose.
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Mat2 n1 = mat_upper(ctx, random_elem(ctx, rng));
        Mat2 n2 = mat_upper(ctx, random_elem(ctx, rng));
        for (int c : {0, 1, 2}) CHECK(kubota_cocycle(ctx, n1, n2, c) == Mu3(0));
    }
}

TEST_CASE("torus cocycle closed form") {
    // On diagonal pairs the cocycle collapses to
    //   (y2, x1^{-1})_3 + c (x1 y1, x2 y2)_3.
    for (long p : {7L, 13L, 19L}) {
        PrimeContext ctx(p);
        std::mt19937_64 rng(500 + p);
        for (int i = 0; i < 1000; ++i) {
            auto x1 = random_elem(ctx, rng), y1 = random_elem(ctx, rng);
            auto x2 = random_elem(ctx, rng), y2 = random_elem(ctx, rng);
            Mat2 t1 = mat_diag(x1, y1), t2 = mat_diag(x2, y2);
            for (int c : {0, 1, 2}) {
                Mu3 expect = hilbert3(ctx, y2, pinv(ctx, x1)) +
                             static_cast<long>(c) *
                                 hilbert3(ctx, pmul(ctx, x1, y1), pmul(ctx, x2, y2));
                CHECK(kubota_cocycle(ctx, t1, t2, c) == expect);
            }
        }
    }
}

TEST_CASE("cocycle identity on random triples") {
    PrimeContext ctx(7);
    std::mt19937_64 rng(42);
    int rejected = 0, checked = 0;
    for (int i = 0; i < 10000; ++i) {
        Mat2 g1 = random_mat(ctx, rng), g2 = random_mat(ctx, rng), g3 = random_mat(ctx, rng);
        for (int c : {0, 1, 2}) {
            try {
                Mat2 g12 = mat_mul(ctx, g1, g2);
                Mat2 g23 = mat_mul(ctx, g2, g3);
                Mu3 lhs = kubota_cocycle(ctx, g1, g2, c) + kubota_cocycle(ctx, g12, g3, c);
                Mu3 rhs = kubota_cocycle(ctx, g2, g3, c) + kubota_cocycle(ctx, g1, g23, c);
                CHECK(lhs == rhs);
                ++checked;
            } catch (const PrecisionExhausted&) {
                ++rejected;
            }
        }
    }
    CHECK(checked > 20000);
}

TEST_CASE("cover group operations") {
    PrimeContext ctx(7);
    std::mt19937_64 rng(43);

    // x * x^-1 = (e, 0), verified where the matrix product is
    // representable: diagonal and antidiagonal elements multiply out
    // to the identity without cancellation.
    for (int i = 0; i < 500; ++i) {
        auto u = random_elem(ctx, rng), v = random_elem(ctx, rng);
        Mat2 diag = mat_diag(u, v);
        Mat2 anti{PAdicElem(), u, v, PAdicElem()};
        for (const Mat2& g : {diag, anti}) {
            CoverElem x{g, Mu3(static_cast<long>(rng() % 3))};
            for (int c : {0, 1, 2}) {
                CoverElem prod = cover_mul(ctx, x, cover_inv(ctx, x, c), c);
                CHECK(prod.z == Mu3(0));
                CHECK(peq(ctx, prod.g.a, PAdicElem::one(ctx)));
                CHECK(prod.g.b.is_zero());
            }
        }
    }

    // Double inverse is the identity map on generic elements.  The
    // determinant of the inverse can cancel below working precision;
    // such samples are rejected like everywhere else.
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        CoverElem x{random_mat(ctx, rng), Mu3(static_cast<long>(rng() % 3))};
        for (int c : {0, 1, 2}) {
            try {
                CoverElem xii = cover_inv(ctx, cover_inv(ctx, x, c), c);
                CHECK(xii.z == x.z);
                CHECK(peq(ctx, xii.g.a, x.g.a));
                CHECK(peq(ctx, xii.g.d, x.g.d));
                ++checked;
            } catch (const PrecisionExhausted&) {
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("splitting pinned value and homomorphy") {
    PrimeContext ctx(7);
    Mat2 k{PAdicElem::from_int(ctx, 3), PAdicElem::from_int(ctx, 1),
           PAdicElem::from_int(ctx, 7), PAdicElem::from_int(ctx, 3)};
    CHECK(kubota_splitting(ctx, k, 0).z == Mu3(1));  // (7, 3/2)_3

    Mat2 low = mat_lower(ctx, PAdicElem::uniformizer(ctx));
    CHECK(kubota_splitting(ctx, low, 0).z == Mu3(0));

    CHECK_THROWS_AS(kubota_splitting(ctx, mat_diag(PAdicElem::uniformizer(ctx), PAdicElem::one(ctx)), 0),
                    std::domain_error);

    std::mt19937_64 rng(99);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        Mat2 k1 = random_k(ctx, rng), k2 = random_k(ctx, rng);
        for (int c : {0, 1, 2}) {
            try {
                CoverElem lhs = cover_mul(ctx, kubota_splitting(ctx, k1, c),
                                          kubota_splitting(ctx, k2, c), c);
                CoverElem rhs = kubota_splitting(ctx, mat_mul(ctx, k1, k2), c);
                CHECK(lhs.z == rhs.z);
                ++checked;
            } catch (const PrecisionExhausted&) {
            }
        }
    }
    CHECK(checked > 20000);
}
