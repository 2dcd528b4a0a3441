#include "cubic/padic.hpp"

#include <numeric>

namespace cubic {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long mod_pow(long a, long e, long m) {
    long r = 1 % m;
    a %= m;
    if (a < 0) a += m;
    while (e > 0) {
        if (e & 1) r = (r * a) % m;
        a = (a * a) % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

PrimeContext::PrimeContext(long p, int max_digits) : p_(p), M_(max_digits) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeContext: p must be prime");
    if (p % 3 != 1) throw std::invalid_argument("PrimeContext: need p = 1 mod 3");
    if (max_digits < 1 || max_digits > 6)
        throw std::invalid_argument("PrimeContext: max_digits out of range");

    pow_.resize(static_cast<size_t>(2 * M_ + 1));
    pow_[0] = 1;
    for (int k = 1; k <= 2 * M_; ++k) pow_[static_cast<size_t>(k)] = pow_[static_cast<size_t>(k - 1)] * p_;

    // Smallest primitive root mod p.
    gen_ = 0;
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long d = 2; d * d <= p - 1; ++d) {
            if ((p - 1) % d == 0) {
                if (mod_pow(g, d, p) == 1 || mod_pow(g, (p - 1) / d, p) == 1) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            gen_ = g;
            break;
        }
    }
    omega_ = mod_pow(gen_, (p - 1) / 3, p);
}

Mu3 PrimeContext::residue_class(long r) const {
    r %= p_;
    if (r < 0) r += p_;
    if (r == 0) throw std::domain_error("residue_class: not a unit");
    long c = mod_pow(r, (p_ - 1) / 3, p_);
    if (c == 1) return Mu3(0);
    if (c == omega_) return Mu3(1);
    return Mu3(2);  // omega^2, the only remaining cube root of 1
}

long PrimeContext::pow_mod(long a, long k) const {
    long e = k % (p_ - 1);
    if (e < 0) e += p_ - 1;
    return mod_pow(a, e, p_);
}

long PrimeContext::inv_mod_p(long a) const { return pow_mod(a, p_ - 2); }

PAdicElem::PAdicElem(const PrimeContext& ctx, long val, long unit, int prec)
    : zero_(false), val_(val), prec_(prec) {
    if (prec < 1 || prec > ctx.max_digits())
        throw std::invalid_argument("PAdicElem: prec out of range");
    long m = ctx.pow(prec);
    unit %= m;
    if (unit < 0) unit += m;
    if (unit % ctx.p() == 0) throw std::invalid_argument("PAdicElem: unit divisible by p");
    unit_ = unit;
}

PAdicElem PAdicElem::from_int(const PrimeContext& ctx, long n) {
    if (n == 0) return PAdicElem();
    long val = 0;
    while (n % ctx.p() == 0) {
        n /= ctx.p();
        ++val;
    }
    return PAdicElem(ctx, val, n, ctx.max_digits());
}

PAdicElem PAdicElem::uniformizer(const PrimeContext& ctx, long k) {
    return PAdicElem(ctx, k, 1, ctx.max_digits());
}

long PAdicElem::val() const {
    if (zero_) throw std::domain_error("val of exact zero");
    return val_;
}

long PAdicElem::unit() const {
    if (zero_) throw std::domain_error("unit of exact zero");
    return unit_;
}

int PAdicElem::prec() const {
    if (zero_) throw std::domain_error("prec of exact zero");
    return prec_;
}

long PAdicElem::residue(const PrimeContext& ctx) const { return unit() % ctx.p(); }

PAdicElem padd(const PrimeContext& ctx, const PAdicElem& x, const PAdicElem& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;

    long v = std::min(x.val(), y.val());
    long d1 = x.val() - v, d2 = y.val() - v;
    // Digits of the sum known beyond p^v.  One of d1, d2 is zero, so
    // k1 <= max_digits and everything below stays inside the power table.
    long k1 = std::min<long>(x.prec() + d1, y.prec() + d2);
    if (k1 <= 0) throw PrecisionExhausted("padd: no digits survive the shift");

    auto shifted = [&](const PAdicElem& t, long d) -> long {
        // t.unit * p^d mod p^k1; a shift past the window contributes 0.
        if (d >= k1) return 0;
        return (t.unit() % ctx.pow(static_cast<int>(k1 - d))) * ctx.pow(static_cast<int>(d));
    };
    long m = ctx.pow(static_cast<int>(k1));
    long s = (shifted(x, d1) + shifted(y, d2)) % m;
    if (s == 0) throw PrecisionExhausted("padd: full cancellation at working precision");

    long t = 0;
    while (s % ctx.p() == 0) {
        s /= ctx.p();
        ++t;
    }
    int prec = static_cast<int>(std::min<long>(k1 - t, ctx.max_digits()));
    // k1 - t >= 1: otherwise s would have been 0 mod p^k1.
    return PAdicElem(ctx, v + t, s, prec);
}

PAdicElem pneg(const PrimeContext& ctx, const PAdicElem& x) {
    if (x.is_zero()) return x;
    return PAdicElem(ctx, x.val(), ctx.pow(x.prec()) - x.unit(), x.prec());
}

PAdicElem psub(const PrimeContext& ctx, const PAdicElem& x, const PAdicElem& y) {
    return padd(ctx, x, pneg(ctx, y));
}

PAdicElem pmul(const PrimeContext& ctx, const PAdicElem& x, const PAdicElem& y) {
    if (x.is_zero() || y.is_zero()) return PAdicElem();
    int prec = std::min(x.prec(), y.prec());
    long m = ctx.pow(prec);
    long u = ((x.unit() % m) * (y.unit() % m)) % m;
    return PAdicElem(ctx, x.val() + y.val(), u, prec);
}

PAdicElem pinv(const PrimeContext& ctx, const PAdicElem& x) {
    if (x.is_zero()) throw std::domain_error("pinv of zero");
    long m = ctx.pow(x.prec());
    // Lift the inverse mod p through the digits (Newton step doubles digits).
    long u = ctx.inv_mod_p(x.unit());
    long have = 1;
    while (have < x.prec()) {
        have = std::min<long>(2 * have, x.prec());
        long mm = ctx.pow(static_cast<int>(have));
        u = (u * ((2 - ((x.unit() % mm) * u) % mm) % mm + mm)) % mm;
    }
    u %= m;
    if (u < 0) u += m;
    return PAdicElem(ctx, -x.val(), u, x.prec());
}

PAdicElem pdiv(const PrimeContext& ctx, const PAdicElem& x, const PAdicElem& y) {
    return pmul(ctx, x, pinv(ctx, y));
}

bool peq(const PrimeContext& ctx, const PAdicElem& x, const PAdicElem& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero();
    if (x.val() != y.val()) return false;
    long m = ctx.pow(std::min(x.prec(), y.prec()));
    return x.unit() % m == y.unit() % m;
}

std::string to_string(const PAdicElem& x) {
    if (x.is_zero()) return "0";
    return std::to_string(x.val()) + ":" + std::to_string(x.unit()) + "~" + std::to_string(x.prec());
}

Mu3 cubic_residue(const PrimeContext& ctx, const PAdicElem& x) {
    if (x.is_zero() || x.val() != 0) throw std::domain_error("cubic_residue: argument must be a unit");
    return ctx.residue_class(x.residue(ctx));
}

Mu3 hilbert3(const PrimeContext& ctx, const PAdicElem& a, const PAdicElem& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("hilbert3: zero argument");
    long m = a.val(), n = b.val();
    long ra = a.residue(ctx), rb = b.residue(ctx);
    long t = ctx.pow_mod(ra, n) * ctx.pow_mod(rb, -m) % ctx.p();
    if ((m * n) % 2 != 0) t = (ctx.p() - t) % ctx.p();
    return ctx.residue_class(t);
}

}  // namespace cubic
