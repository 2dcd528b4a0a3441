#include "cubic/cover.hpp"

#include <numeric>

namespace cubic {

int central_degree(int c) {
    if (c < 0 || c > 2) throw std::invalid_argument("central_degree: c in {0,1,2}");
    return 3 / std::gcd(1 + 4 * c, 3);
}

Mu3 kubota_cocycle(const PrimeContext& ctx, const Mat2& g1, const Mat2& g2, int c) {
    if (c < 0 || c > 2) throw std::invalid_argument("kubota_cocycle: c in {0,1,2}");
    Mat2 g12 = mat_mul(ctx, g1, g2);
    const PAdicElem& k1 = k_entry(g1);
    const PAdicElem& k2 = k_entry(g2);
    const PAdicElem& k12 = k_entry(g12);
    PAdicElem det1 = mat_det(ctx, g1);

    PAdicElem x = pdiv(ctx, k12, k1);
    PAdicElem y = pdiv(ctx, k12, pmul(ctx, k2, det1));
    Mu3 s = hilbert3(ctx, x, y);
    if (c != 0) s = s + static_cast<long>(c) * hilbert3(ctx, det1, mat_det(ctx, g2));
    return s;
}

CoverElem cover_mul(const PrimeContext& ctx, const CoverElem& x, const CoverElem& y, int c) {
    Mu3 s = kubota_cocycle(ctx, x.g, y.g, c);
    return CoverElem{mat_mul(ctx, x.g, y.g), x.z + y.z + s};
}

CoverElem cover_inv(const PrimeContext& ctx, const CoverElem& x, int c) {
    Mat2 gi = mat_inv(ctx, x.g);
    // sigma(g, g^-1) with the product known to be the identity exactly;
    // forming g g^-1 in truncated arithmetic would cancel to nothing.
    Mu3 s = hilbert3(ctx, pinv(ctx, k_entry(x.g)),
                     pinv(ctx, pmul(ctx, k_entry(gi), mat_det(ctx, x.g))));
    if (c != 0) s = s + static_cast<long>(c) * hilbert3(ctx, mat_det(ctx, x.g), mat_det(ctx, gi));
    return CoverElem{gi, -x.z - s};
}

CoverElem kubota_splitting(const PrimeContext& ctx, const Mat2& k, int c) {
    (void)c;
    if (!in_gl2o(ctx, k)) throw std::domain_error("kubota_splitting: not in GL2(O)");
    Mu3 z(0);
    if (!k.c.is_zero() && k.c.val() >= 1)
        z = hilbert3(ctx, k.c, pdiv(ctx, k.d, mat_det(ctx, k)));
    return CoverElem{k, z};
}

}  // namespace cubic
