#include "cubic/matrix.hpp"

namespace cubic {

namespace {

// x*y + z*w with exact-zero shortcuts so structural zeros never
// trigger spurious cancellation throws.
PAdicElem dot(const PrimeContext& ctx, const PAdicElem& x, const PAdicElem& y,
              const PAdicElem& z, const PAdicElem& w) {
    PAdicElem l = (x.is_zero() || y.is_zero()) ? PAdicElem() : pmul(ctx, x, y);
    PAdicElem r = (z.is_zero() || w.is_zero()) ? PAdicElem() : pmul(ctx, z, w);
    return padd(ctx, l, r);
}

}  // namespace

Mat2 mat_mul(const PrimeContext& ctx, const Mat2& x, const Mat2& y) {
    return Mat2{dot(ctx, x.a, y.a, x.b, y.c), dot(ctx, x.a, y.b, x.b, y.d),
                dot(ctx, x.c, y.a, x.d, y.c), dot(ctx, x.c, y.b, x.d, y.d)};
}

PAdicElem mat_det(const PrimeContext& ctx, const Mat2& x) {
    PAdicElem ad = (x.a.is_zero() || x.d.is_zero()) ? PAdicElem() : pmul(ctx, x.a, x.d);
    PAdicElem bc = (x.b.is_zero() || x.c.is_zero()) ? PAdicElem() : pmul(ctx, x.b, x.c);
    return psub(ctx, ad, bc);
}

Mat2 mat_inv(const PrimeContext& ctx, const Mat2& x) {
    PAdicElem det = mat_det(ctx, x);
    if (det.is_zero()) throw std::domain_error("mat_inv: zero determinant");
    PAdicElem idet = pinv(ctx, det);
    auto scale = [&](const PAdicElem& e) { return e.is_zero() ? e : pmul(ctx, e, idet); };
    return Mat2{scale(x.d), scale(pneg(ctx, x.b)), scale(pneg(ctx, x.c)), scale(x.a)};
}

Mat2 mat_identity(const PrimeContext& ctx) {
    return Mat2{PAdicElem::one(ctx), PAdicElem(), PAdicElem(), PAdicElem::one(ctx)};
}

Mat2 mat_diag(const PAdicElem& x, const PAdicElem& y) {
    return Mat2{x, PAdicElem(), PAdicElem(), y};
}

Mat2 mat_w(const PrimeContext& ctx) {
    return Mat2{PAdicElem(), PAdicElem::one(ctx), PAdicElem::one(ctx), PAdicElem()};
}

Mat2 mat_upper(const PrimeContext& ctx, const PAdicElem& x) {
    return Mat2{PAdicElem::one(ctx), x, PAdicElem(), PAdicElem::one(ctx)};
}

Mat2 mat_lower(const PrimeContext& ctx, const PAdicElem& x) {
    return Mat2{PAdicElem::one(ctx), PAdicElem(), x, PAdicElem::one(ctx)};
}

bool in_gl2o(const PrimeContext& ctx, const Mat2& k) {
    (void)ctx;
    if (!(k.a.is_integral() && k.b.is_integral() && k.c.is_integral() && k.d.is_integral()))
        return false;
    PAdicElem det = mat_det(ctx, k);
    return !det.is_zero() && det.val() == 0;
}

const PAdicElem& k_entry(const Mat2& g) { return g.c.is_zero() ? g.d : g.c; }

}  // namespace cubic
