#pragma once

#include <random>
#include <vector>

#include "cubic/padic.hpp"

namespace cubic {

/*
 * Finite combinatorics of compact-level intertwiners.  Everything is
 * computed twice: once by honest orbit enumeration over Z/p^m with
 * character conditions evaluated through the cubic Hilbert symbol, and
 * once from the closed dimension tables; the two must agree.
 *
 * Subgroups, all containing the principal units:
 *   K(m)   = { c = 0 mod pi^m }
 *   K(1,m) = { c = 0 mod pi,  b = 0 mod pi^m }
 * The coset spaces carry the left multiplication action and are
 * modelled on one projective line over Z/p^m.
 */

struct ZRing {
    ZRing(long p, int lvl);

    long p() const { return p_; }
    int lvl() const { return lvl_; }
    long mod() const { return mod_; }

    long reduce(long x) const;
    long add(long x, long y) const { return reduce(x + y); }
    long sub(long x, long y) const { return reduce(x - y); }
    long mul(long x, long y) const { return reduce(reduce(x) * reduce(y)); }
    long inv(long x) const;  // throws std::domain_error on non-units
    long pk(int k) const;    // p^k, 0 <= k <= lvl
    bool unit(long x) const { return reduce(x) % p_ != 0; }
    int val(long x) const;   // valuation capped at lvl

  private:
    long p_;
    int lvl_;
    long mod_;
};

struct ZMat {
    long a = 1, b = 0, c = 0, d = 1;
};

ZMat zmul(const ZRing& r, const ZMat& x, const ZMat& y);
long zdet(const ZRing& r, const ZMat& x);
ZMat zinv(const ZRing& r, const ZMat& x);
// g^{-1} x g
ZMat zconj(const ZRing& r, const ZMat& g, const ZMat& x);

// A point of P^1(Z/p^m) in normalized form: (t : 1) when affine,
// otherwise (1 : t) with t divisible by p.
struct PPoint {
    bool affine = true;
    long t = 0;

    friend bool operator==(const PPoint& x, const PPoint& y) = default;
    friend auto operator<=>(const PPoint& x, const PPoint& y) = default;
};

PPoint normalize_point(const ZRing& r, long u, long v);
PPoint act_point(const ZRing& r, const ZMat& g, const PPoint& pt);

enum class CosetModel {
    FullLine,   // K / K(m): all of P^1
    Cuspidal,   // K(1) / K(m): the non-affine points
    Affine,     // K(1) / K(1,m): the affine points
};

std::vector<PPoint> enumerate_space(const ZRing& r, CosetModel model);

// Smallest generator of the full unit group of Z/p^lvl.
long unit_group_generator(const PrimeContext& ctx, int lvl);

// {E12(p^b_lvl), E21(p^c_lvl), diag(g0, 1), diag(1, g0)} generate the
// congruence subgroup with those entry levels.
std::vector<ZMat> congruence_generators(const ZRing& r, long g0, int c_lvl, int b_lvl);

struct OrbitDecomposition {
    std::vector<int> orbit_of;      // space index -> orbit id
    std::vector<long> orbit_size;
    std::vector<PPoint> space;
};

OrbitDecomposition orbit_decomposition(const ZRing& r, CosetModel model,
                                       const std::vector<ZMat>& gens);

/*
 * Characters of the compact subgroups through the splitting: the
 * (a, b) line at twist c evaluates on k as
 *   (pi^{b+2c(a+b)}, k_11)_3 (pi^{a+2c(a+b)}, k_22)_3,
 * optionally precomposed with the diagonal swap.
 */
struct ResidueChar {
    int ex = 0, ey = 0;  // uniformizer exponents mod 3
    bool swapped = false;
};

ResidueChar kappa_char(int a, int b, int c);
ResidueChar swap_char(ResidueChar ch);
Mu3 eval_residue_char(const PrimeContext& ctx, const ResidueChar& ch, long r1, long r2);

// Coset representative shapes and the induced residue-pair data.
struct CosetType {
    int kind = 0;   // 0 identity, 1 long Weyl, 2 lower E21(p^j), 3 upper E12(p^j)
    int param = 0;  // the j above
};

// Characters agree on the achievable residue pairs of the coset's
// intersection subgroup: full (F_p^x)^2 for kinds 0 and 1 (the latter
// conjugating by the swap), the diagonal for the unipotent kinds.
bool chars_agree_on_coset(const PrimeContext& ctx, const ResidueChar& lhs,
                          const ResidueChar& rhs, const CosetType& type);

// Randomized verification of the residue-pair reduction: sample actual
// intersection elements at working level, check raw membership of x
// and g^{-1} x g, and compare direct character evaluation against the
// predicted agreement.  Returns false when any sample contradicts it.
bool backstop_coset_condition(const PrimeContext& ctx, std::mt19937_64& rng, int m_left,
                              int m_right, bool left_stair, bool right_stair,
                              const CosetType& type, const ResidueChar& lhs,
                              const ResidueChar& rhs, int samples);

/*
 * Intertwiner dimensions.  Left data acts, right data induces; the
 * enumerated value counts cosets whose characters agree, the table
 * value comes from the closed conditions
 *   (I)   a-b = a'-b' mod 3  and  d | a-a'
 *   (II)  a-b = b'-a' mod 3  and  d | a-b'
 *   (III) a+b = a'+b' mod d.
 */
struct CharLine {
    int a = 0, b = 0;
};

bool cond_same(const CharLine& l, const CharLine& r, int c);      // (I)
bool cond_swapped(const CharLine& l, const CharLine& r, int c);   // (II)
bool cond_central(const CharLine& l, const CharLine& r, int c);   // (III)

int intertwining_dim(const PrimeContext& ctx, int m_left, int m_right, const CharLine& l,
                     const CharLine& r, int c);
int intertwining_dim_table(int m_left, int m_right, const CharLine& l, const CharLine& r, int c);

enum class K1Pair {
    LevelLevel,  // both characters on K(m), cosets inside K(1)
    LevelStair,  // K(m) against K(1,m) with the swapped line
    StairStair,  // both on K(1,m), both lines swapped
};

int k1_intertwining_dim(const PrimeContext& ctx, int m, const CharLine& l, const CharLine& r,
                        int c, K1Pair pair);
int k1_intertwining_dim_table(int m, const CharLine& l, const CharLine& r, int c, K1Pair pair);

/*
 * Fixed-vector count of the (a, b) line at depth k of an m-level
 * filtration, and its central sum; the level walk along (k, 0)
 * accumulates to m, with a single spherical vector at the bottom.
 */
int dim_fixed_line(int a, int b, int k, int m, int c);
int dim_fixed_line_sum(int a, int b, int k, int m, int c);
bool level_consistency(int m, int c);

}  // namespace cubic
