#pragma once

#include "cubic/padic.hpp"

namespace cubic {

// 2x2 matrices over the truncated p-adic field.  Entries may be exact
// zero; a "generic" sampled matrix has all entries nonzero.
struct Mat2 {
    PAdicElem a, b, c, d;
};

Mat2 mat_mul(const PrimeContext& ctx, const Mat2& x, const Mat2& y);
PAdicElem mat_det(const PrimeContext& ctx, const Mat2& x);
Mat2 mat_inv(const PrimeContext& ctx, const Mat2& x);

Mat2 mat_identity(const PrimeContext& ctx);
Mat2 mat_diag(const PAdicElem& x, const PAdicElem& y);
// [[0,1],[1,0]]
Mat2 mat_w(const PrimeContext& ctx);
// Upper / lower elementary matrices.
Mat2 mat_upper(const PrimeContext& ctx, const PAdicElem& x);
Mat2 mat_lower(const PrimeContext& ctx, const PAdicElem& x);

// Entries integral and determinant a unit.
bool in_gl2o(const PrimeContext& ctx, const Mat2& k);

// Bottom-row slot entering the cocycle: c when c != 0, else d.
// The truncated model treats a stored nonzero c as genuinely nonzero.
const PAdicElem& k_entry(const Mat2& g);

}  // namespace cubic
