#pragma once

#include "cubic/matrix.hpp"

namespace cubic {

/*
 * Degree-3 metaplectic cover of GL(2), twist parameter c in {0,1,2}.
 *
 * Elements are pairs (g, z) with z in mu_3 (additive), multiplied by
 * the 2-cocycle sigma below.  The twisted cocycle degree of the
 * centre is d = 3/gcd(1+4c, 3): d = 3 for c in {0,1}, d = 1 for c = 2.
 *
 * The bottom-row slot K(g) is c if c != 0 and d otherwise; the cocycle
 *   sigma(g1,g2) = ( K(g1g2)/K(g1), K(g1g2)/(K(g2) det g1) )_3
 *                  + c ( det g1, det g2 )_3
 * needs one unit digit of each slot, so precision loss only enters
 * through the matrix product forming g1 g2.
 */

struct CoverElem {
    Mat2 g;
    Mu3 z;
};

// Twisted centre period: 3 for c = 0, 1; 1 for c = 2.
int central_degree(int c);

Mu3 kubota_cocycle(const PrimeContext& ctx, const Mat2& g1, const Mat2& g2, int c);

CoverElem cover_mul(const PrimeContext& ctx, const CoverElem& x, const CoverElem& y, int c);
CoverElem cover_inv(const PrimeContext& ctx, const CoverElem& x, int c);

// Splitting of GL2(O) over the cover: k -> (k, s(k)) with
//   s(k) = (c, d/det)_3  when 0 < |c| < 1,  else 0.
// Throws std::domain_error when k is not in GL2(O).
CoverElem kubota_splitting(const PrimeContext& ctx, const Mat2& k, int c);

}  // namespace cubic
