#include "cubic/ktypes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubic/cover.hpp"

namespace cubic {

namespace {

long imod(long x, long k) { return ((x % k) + k) % k; }

}  // namespace

ZRing::ZRing(long p, int lvl) : p_(p), lvl_(lvl) {
    if (p < 2 || lvl < 1) throw std::domain_error("ZRing: bad parameters");
    mod_ = 1;
    for (int i = 0; i < lvl; ++i) {
        if (mod_ > (1L << 30)) throw std::domain_error("ZRing: modulus too large");
        mod_ *= p;
    }
}

long ZRing::reduce(long x) const { return imod(x, mod_); }

long ZRing::inv(long x) const {
    long a = reduce(x);
    if (!unit(a)) throw std::domain_error("ZRing::inv: non-unit");
    // Euler: order of the unit group is p^{lvl-1}(p-1).
    long order = (mod_ / p_) * (p_ - 1);
    long r = 1, base = a, e = order - 1;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

long ZRing::pk(int k) const {
    if (k < 0) throw std::domain_error("ZRing::pk: negative exponent");
    if (k >= lvl_) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r *= p_;
    return r;
}

int ZRing::val(long x) const {
    long a = reduce(x);
    if (a == 0) return lvl_;
    int v = 0;
    while (a % p_ == 0) {
        a /= p_;
        ++v;
    }
    return v;
}

ZMat zmul(const ZRing& r, const ZMat& x, const ZMat& y) {
    return ZMat{r.add(r.mul(x.a, y.a), r.mul(x.b, y.c)), r.add(r.mul(x.a, y.b), r.mul(x.b, y.d)),
                r.add(r.mul(x.c, y.a), r.mul(x.d, y.c)), r.add(r.mul(x.c, y.b), r.mul(x.d, y.d))};
}

long zdet(const ZRing& r, const ZMat& x) { return r.sub(r.mul(x.a, x.d), r.mul(x.b, x.c)); }

ZMat zinv(const ZRing& r, const ZMat& x) {
    long di = r.inv(zdet(r, x));
    return ZMat{r.mul(di, x.d), r.mul(di, r.sub(0, x.b)), r.mul(di, r.sub(0, x.c)),
                r.mul(di, x.a)};
}

ZMat zconj(const ZRing& r, const ZMat& g, const ZMat& x) {
    return zmul(r, zmul(r, zinv(r, g), x), g);
}

PPoint normalize_point(const ZRing& r, long u, long v) {
    long uu = r.reduce(u), vv = r.reduce(v);
    if (r.unit(vv)) return PPoint{true, r.mul(uu, r.inv(vv))};
    if (!r.unit(uu)) throw std::domain_error("normalize_point: not unimodular");
    return PPoint{false, r.mul(vv, r.inv(uu))};
}

PPoint act_point(const ZRing& r, const ZMat& g, const PPoint& pt) {
    long u = pt.affine ? pt.t : 1;
    long v = pt.affine ? 1 : pt.t;
    return normalize_point(r, r.add(r.mul(g.a, u), r.mul(g.b, v)),
                           r.add(r.mul(g.c, u), r.mul(g.d, v)));
}

std::vector<PPoint> enumerate_space(const ZRing& r, CosetModel model) {
    std::vector<PPoint> pts;
    if (model == CosetModel::FullLine || model == CosetModel::Affine) {
        for (long t = 0; t < r.mod(); ++t) pts.push_back(PPoint{true, t});
    }
    if (model == CosetModel::FullLine || model == CosetModel::Cuspidal) {
        for (long t = 0; t < r.mod(); t += r.p()) pts.push_back(PPoint{false, t});
    }
    return pts;
}

long unit_group_generator(const PrimeContext& ctx, int lvl) {
    long g0 = ctx.gen();
    if (lvl >= 2) {
        // A primitive root mod p generates mod p^k unless it fails mod p^2.
        long p2 = ctx.p() * ctx.p();
        long r = 1, base = g0 % p2, e = ctx.p() - 1;
        while (e > 0) {
            if (e & 1) r = (r * base) % p2;
            base = (base * base) % p2;
            e >>= 1;
        }
        if (r == 1) g0 += ctx.p();
    }
    return g0;
}

std::vector<ZMat> congruence_generators(const ZRing& r, long g0, int c_lvl, int b_lvl) {
    long gg = r.reduce(g0);
    return {ZMat{1, r.pk(b_lvl), 0, 1}, ZMat{1, 0, r.pk(c_lvl), 1}, ZMat{gg, 0, 0, 1},
            ZMat{1, 0, 0, gg}};
}

OrbitDecomposition orbit_decomposition(const ZRing& r, CosetModel model,
                                       const std::vector<ZMat>& gens) {
    OrbitDecomposition dec;
    dec.space = enumerate_space(r, model);
    std::map<PPoint, int> index;
    for (size_t i = 0; i < dec.space.size(); ++i) index[dec.space[i]] = static_cast<int>(i);
    dec.orbit_of.assign(dec.space.size(), -1);

    for (size_t seed = 0; seed < dec.space.size(); ++seed) {
        if (dec.orbit_of[seed] >= 0) continue;
        int oid = static_cast<int>(dec.orbit_size.size());
        long size = 0;
        std::vector<int> stack{static_cast<int>(seed)};
        dec.orbit_of[seed] = oid;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            ++size;
            for (const ZMat& g : gens) {
                PPoint img = act_point(r, g, dec.space[static_cast<size_t>(cur)]);
                auto it = index.find(img);
                if (it == index.end())
                    throw std::logic_error("orbit_decomposition: action left the model");
                if (dec.orbit_of[static_cast<size_t>(it->second)] < 0) {
                    dec.orbit_of[static_cast<size_t>(it->second)] = oid;
                    stack.push_back(it->second);
                }
            }
        }
        dec.orbit_size.push_back(size);
    }
    return dec;
}

ResidueChar kappa_char(int a, int b, int c) {
    ResidueChar ch;
    ch.ex = static_cast<int>(imod(b + 2L * c * (a + b), 3));
    ch.ey = static_cast<int>(imod(a + 2L * c * (a + b), 3));
    return ch;
}

ResidueChar swap_char(ResidueChar ch) {
    ch.swapped = !ch.swapped;
    return ch;
}

Mu3 eval_residue_char(const PrimeContext& ctx, const ResidueChar& ch, long r1, long r2) {
    long x = ch.swapped ? r2 : r1;
    long y = ch.swapped ? r1 : r2;
    Mu3 out;
    if (ch.ex != 0)
        out = out + hilbert3(ctx, PAdicElem::uniformizer(ctx, ch.ex), PAdicElem::from_int(ctx, x));
    if (ch.ey != 0)
        out = out + hilbert3(ctx, PAdicElem::uniformizer(ctx, ch.ey), PAdicElem::from_int(ctx, y));
    return out;
}

bool chars_agree_on_coset(const PrimeContext& ctx, const ResidueChar& lhs, const ResidueChar& rhs,
                          const CosetType& type) {
    long g0 = ctx.gen();
    bool conj_swap = (type.kind == 1);
    std::vector<std::pair<long, long>> pairs;
    if (type.kind == 0 || type.kind == 1)
        pairs = {{g0, 1}, {1, g0}};
    else
        pairs = {{g0, g0}};
    for (auto [r1, r2] : pairs) {
        Mu3 l = eval_residue_char(ctx, lhs, r1, r2);
        Mu3 r = conj_swap ? eval_residue_char(ctx, rhs, r2, r1) : eval_residue_char(ctx, rhs, r1, r2);
        if (l != r) return false;
    }
    return true;
}

namespace {

bool in_congruence(const ZRing& r, const ZMat& x, int c_lvl, int b_lvl) {
    return r.val(x.c) >= c_lvl && r.val(x.b) >= b_lvl && r.unit(zdet(r, x));
}

long rand_mod(std::mt19937_64& rng, long mod) {
    return static_cast<long>(rng() % static_cast<unsigned long>(mod));
}

long rand_unit(const ZRing& r, std::mt19937_64& rng) {
    for (;;) {
        long x = rand_mod(rng, r.mod());
        if (r.unit(x)) return x;
    }
}

}  // namespace

bool backstop_coset_condition(const PrimeContext& ctx, std::mt19937_64& rng, int m_left,
                              int m_right, bool left_stair, bool right_stair,
                              const CosetType& type, const ResidueChar& lhs,
                              const ResidueChar& rhs, int samples) {
    int lvl = std::max(m_left, m_right) + 1;
    ZRing r(ctx.p(), lvl);
    int cl = left_stair ? 1 : m_left;
    int bl = left_stair ? m_left : 0;
    int cr = right_stair ? 1 : m_right;
    int br = right_stair ? m_right : 0;

    ZMat g;
    switch (type.kind) {
        case 0: break;
        case 1: g = ZMat{0, r.sub(0, 1), 1, 0}; break;
        case 2: g = ZMat{1, 0, r.pk(type.param), 1}; break;
        case 3: g = ZMat{1, r.pk(type.param), 0, 1}; break;
        default: throw std::domain_error("backstop: unknown coset kind");
    }

    bool all_agree = true;
    int got = 0, attempts = 0;
    while (got < samples) {
        if (++attempts > 100 * samples + 100)
            throw std::logic_error("backstop: sampling starved");
        ZMat x;
        if (type.kind == 0) {
            x = ZMat{rand_unit(r, rng), r.mul(rand_mod(rng, r.mod()), r.pk(std::max(bl, br))),
                     r.mul(rand_mod(rng, r.mod()), r.pk(std::max(cl, cr))), rand_unit(r, rng)};
        } else if (type.kind == 1) {
            // Conjugation by the Weyl element swaps the off-diagonal levels.
            x = ZMat{rand_unit(r, rng), r.mul(rand_mod(rng, r.mod()), r.pk(m_right)),
                     r.mul(rand_mod(rng, r.mod()), r.pk(m_left)), rand_unit(r, rng)};
        } else if (type.kind == 2) {
            // Solve the lower-left constraint of g^{-1} x g for a.
            int j = type.param;
            long d = rand_unit(r, rng);
            long b = rand_mod(rng, r.mod());
            long c = r.mul(rand_mod(rng, r.mod()), r.pk(m_left));
            long s = rand_mod(rng, r.mod());
            long v = r.sub(c, r.mul(s, r.pk(m_right)));
            long a = r.sub(r.add(d, v / r.pk(j)), r.mul(r.pk(j), b));
            x = ZMat{a, b, c, d};
            if (!r.unit(a)) continue;
        } else {
            // Upper unipotent representative between staircase subgroups.
            int i = type.param;
            long d = rand_unit(r, rng);
            long c = r.mul(rand_mod(rng, r.mod()), r.pk(1));
            long w = rand_mod(rng, r.mod());
            long a = r.add(d, r.add(r.mul(r.pk(i), c), r.mul(w, r.pk(m_left - i))));
            long b = r.mul(rand_mod(rng, r.mod()), r.pk(m_left));
            x = ZMat{a, b, c, d};
            if (!r.unit(a)) continue;
        }
        if (!r.unit(zdet(r, x))) continue;

        ZMat y = zconj(r, g, x);
        if (!in_congruence(r, x, cl, bl) || !in_congruence(r, y, cr, br))
            return false;  // parametrization failed to land in the intersection

        Mu3 l = eval_residue_char(ctx, lhs, x.a % ctx.p(), x.d % ctx.p());
        Mu3 rr = eval_residue_char(ctx, rhs, y.a % ctx.p(), y.d % ctx.p());
        if (l != rr) all_agree = false;
        ++got;
    }
    return all_agree == chars_agree_on_coset(ctx, lhs, rhs, type);
}

bool cond_same(const CharLine& l, const CharLine& r, int c) {
    int d = central_degree(c);
    return imod((l.a - l.b) - (r.a - r.b), 3) == 0 && imod(l.a - r.a, d) == 0;
}

bool cond_swapped(const CharLine& l, const CharLine& r, int c) {
    int d = central_degree(c);
    return imod((l.a - l.b) + (r.a - r.b), 3) == 0 && imod(l.a - r.b, d) == 0;
}

bool cond_central(const CharLine& l, const CharLine& r, int c) {
    int d = central_degree(c);
    return imod((l.a + l.b) - (r.a + r.b), d) == 0;
}

namespace {

// Match each expected representative to its orbit; every orbit must be
// hit exactly once or the decomposition is not the predicted one.
std::vector<CosetType> classify_orbits(const OrbitDecomposition& dec,
                                       const std::vector<std::pair<PPoint, CosetType>>& reps) {
    std::map<PPoint, int> index;
    for (size_t i = 0; i < dec.space.size(); ++i) index[dec.space[i]] = dec.orbit_of[i];
    std::vector<CosetType> types(dec.orbit_size.size());
    std::vector<bool> seen(dec.orbit_size.size(), false);
    for (const auto& [pt, ty] : reps) {
        auto it = index.find(pt);
        if (it == index.end()) throw std::logic_error("classify_orbits: representative off-model");
        int oid = it->second;
        if (seen[static_cast<size_t>(oid)])
            throw std::logic_error("classify_orbits: representatives collide");
        seen[static_cast<size_t>(oid)] = true;
        types[static_cast<size_t>(oid)] = ty;
    }
    for (bool s : seen)
        if (!s) throw std::logic_error("classify_orbits: unmatched orbit");
    return types;
}

std::vector<CosetType> decompose_and_classify(const PrimeContext& ctx, int m_act, bool act_stair,
                                              int m_space, CosetModel model,
                                              const std::vector<std::pair<PPoint, CosetType>>& reps) {
    ZRing r(ctx.p(), m_space);
    long g0 = unit_group_generator(ctx, m_space);
    auto gens = act_stair ? congruence_generators(r, g0, 1, m_act)
                          : congruence_generators(r, g0, m_act, 0);
    auto dec = orbit_decomposition(r, model, gens);
    return classify_orbits(dec, reps);
}

}  // namespace

int intertwining_dim(const PrimeContext& ctx, int m_left, int m_right, const CharLine& l,
                     const CharLine& r, int c) {
    if (m_left < 1 || m_right < 1) throw std::domain_error("intertwining_dim: level must be >= 1");
    ZRing ring(ctx.p(), m_right);
    int mpp = std::min(m_left, m_right);
    std::vector<std::pair<PPoint, CosetType>> reps = {{PPoint{false, 0}, CosetType{0, 0}},
                                                      {PPoint{true, 0}, CosetType{1, 0}}};
    for (int j = 1; j < mpp; ++j) reps.push_back({PPoint{false, ring.pk(j)}, CosetType{2, j}});

    auto types =
        decompose_and_classify(ctx, m_left, false, m_right, CosetModel::FullLine, reps);
    ResidueChar chL = kappa_char(l.a, l.b, c), chR = kappa_char(r.a, r.b, c);
    int dim = 0;
    for (const CosetType& ty : types)
        if (chars_agree_on_coset(ctx, chL, chR, ty)) ++dim;
    return dim;
}

int intertwining_dim_table(int m_left, int m_right, const CharLine& l, const CharLine& r, int c) {
    int mpp = std::min(m_left, m_right);
    bool i1 = cond_same(l, r, c), i2 = cond_swapped(l, r, c), i3 = cond_central(l, r, c);
    if (i1 && i2) return mpp + 1;
    if (i1 || i2) return mpp;
    if (i3) return mpp - 1;
    return 0;
}

int k1_intertwining_dim(const PrimeContext& ctx, int m, const CharLine& l, const CharLine& r,
                        int c, K1Pair pair) {
    if (m < 1) throw std::domain_error("k1_intertwining_dim: level must be >= 1");
    ZRing ring(ctx.p(), m);
    ResidueChar chL, chR;
    std::vector<std::pair<PPoint, CosetType>> reps;
    CosetModel model;
    bool act_stair = false;

    switch (pair) {
        case K1Pair::LevelLevel:
            model = CosetModel::Cuspidal;
            reps.push_back({PPoint{false, 0}, CosetType{0, 0}});
            for (int i = 1; i < m; ++i) reps.push_back({PPoint{false, ring.pk(i)}, CosetType{2, i}});
            chL = kappa_char(l.a, l.b, c);
            chR = kappa_char(r.a, r.b, c);
            break;
        case K1Pair::LevelStair:
            model = CosetModel::Affine;
            reps.push_back({PPoint{true, 0}, CosetType{0, 0}});
            chL = kappa_char(l.a, l.b, c);
            chR = swap_char(kappa_char(r.a, r.b, c));
            break;
        case K1Pair::StairStair:
            model = CosetModel::Affine;
            act_stair = true;
            reps.push_back({PPoint{true, 0}, CosetType{0, 0}});
            for (int i = 0; i < m; ++i) reps.push_back({PPoint{true, ring.pk(i)}, CosetType{3, i}});
            chL = swap_char(kappa_char(l.a, l.b, c));
            chR = swap_char(kappa_char(r.a, r.b, c));
            break;
        default: throw std::domain_error("k1_intertwining_dim: unknown pairing");
    }

    auto types = decompose_and_classify(ctx, m, act_stair, m, model, reps);
    int dim = 0;
    for (const CosetType& ty : types)
        if (chars_agree_on_coset(ctx, chL, chR, ty)) ++dim;
    return dim;
}

int k1_intertwining_dim_table(int m, const CharLine& l, const CharLine& r, int c, K1Pair pair) {
    bool i1 = cond_same(l, r, c), i2 = cond_swapped(l, r, c), i3 = cond_central(l, r, c);
    switch (pair) {
        case K1Pair::LevelLevel: return i1 ? m : (i3 ? m - 1 : 0);
        case K1Pair::LevelStair: return i2 ? 1 : 0;
        case K1Pair::StairStair: return i1 ? m + 1 : (i3 ? m : 0);
        default: throw std::domain_error("k1_intertwining_dim_table: unknown pairing");
    }
}

int dim_fixed_line(int a, int b, int k, int m, int c) {
    int d = central_degree(c);
    if (k >= 2 && k <= m) return imod(a + b, d) == 0 ? 1 : 0;
    if (k == 0 || k == 1) return (imod(a - b, 3) == 0 && imod(a, d) == 0) ? 1 : 0;
    return 0;
}

int dim_fixed_line_sum(int a, int b, int k, int m, int c) {
    (void)c;
    if (k >= 2 && k <= m) return 1;
    if (k == 0 || k == 1) return imod(a - b, 3) == 0 ? 1 : 0;
    return 0;
}

bool level_consistency(int m, int c) {
    int d = central_degree(c);
    for (int k = 0; k <= m; ++k)
        for (int a = -4; a <= 4; ++a)
            for (int b = -4; b <= 4; ++b) {
                int s = 0;
                for (int i = 0; i < d; ++i) s += dim_fixed_line(a + 2 * i, b + 2 * i, k, m, c);
                if (s != dim_fixed_line_sum(a, b, k, m, c)) return false;
            }
    long acc = 0;
    for (int k = 0; k <= m; ++k) acc += dim_fixed_line_sum(k, 0, k, m, c);
    return acc == m && dim_fixed_line_sum(0, 0, 0, m, c) == 1;
}

}  // namespace cubic
