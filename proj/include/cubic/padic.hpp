#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubic {

/*
 * Truncated p-adic arithmetic over Q_p for p = 1 mod 3.
 *
 * A nonzero element is stored as  p^val * unit  with the unit known
 * modulo p^prec, 1 <= prec <= max_digits.  Exact zero is a separate
 * state: zero has no meaningful valuation.  The absolute value is
 * |x| = q^{-val} with q = p (residue field size).
 *
 * Addition can lose unit digits when valuations differ and can lose
 * everything when the leading digits cancel; both conditions raise
 * PrecisionExhausted rather than returning a silently wrong value.
 * Multiplication and inversion never lose digits beyond min(prec).
 *
 * All unit arithmetic fits in int64: p^(2*max_digits) <= 19^12 < 2^63.
 */

struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Cube-root-of-unity exponent: an element of Z/3 written additively.
// Multiplicative characters with values in mu_3 land here.
struct Mu3 {
    int e = 0;  // 0, 1 or 2

    Mu3() = default;
    explicit Mu3(long k) : e(static_cast<int>(((k % 3) + 3) % 3)) {}

    friend Mu3 operator+(Mu3 a, Mu3 b) { return Mu3(a.e + b.e); }
    friend Mu3 operator-(Mu3 a, Mu3 b) { return Mu3(a.e - b.e); }
    Mu3 operator-() const { return Mu3(-e); }
    friend Mu3 operator*(long n, Mu3 a) { return Mu3(n * a.e); }
    friend bool operator==(Mu3 a, Mu3 b) { return a.e == b.e; }
    friend bool operator!=(Mu3 a, Mu3 b) { return a.e != b.e; }
    bool is_trivial() const { return e == 0; }
};

// Fixed data for one prime: power table, the cubic character on the
// residue field, and the distinguished cube root of unity omega.
//
// The identification of the image of x -> x^((p-1)/3) with Z/3 is
// pinned by gen = smallest primitive root mod p and omega = gen^((p-1)/3),
// omega -> 1.  Everything downstream (Hilbert symbols, cocycles,
// Gauss sum indices) inherits this choice.
class PrimeContext {
  public:
    PrimeContext(long p, int max_digits = 6);

    long p() const { return p_; }
    int max_digits() const { return M_; }
    long gen() const { return gen_; }
    long omega() const { return omega_; }

    // p^k for 0 <= k <= 2*max_digits.
    long pow(int k) const { return pow_.at(static_cast<size_t>(k)); }

    // Cubic residue class of a unit residue r (1 <= r < p, r != 0 mod p):
    // iota(r^((p-1)/3)).
    Mu3 residue_class(long r) const;

    // a^k mod p, k reduced mod p-1; k may be negative.
    long pow_mod(long a, long k) const;
    long inv_mod_p(long a) const;

  private:
    long p_;
    int M_;
    long gen_;
    long omega_;
    std::vector<long> pow_;
};

class PAdicElem {
  public:
    // Exact zero.
    PAdicElem() : zero_(true), val_(0), unit_(0), prec_(0) {}

    // p^val * unit with unit known mod p^prec.  unit must be prime to p.
    PAdicElem(const PrimeContext& ctx, long val, long unit, int prec);

    // Embed an ordinary integer (full working precision).
    static PAdicElem from_int(const PrimeContext& ctx, long n);
    static PAdicElem uniformizer(const PrimeContext& ctx, long k = 1);
    static PAdicElem one(const PrimeContext& ctx) { return from_int(ctx, 1); }

    bool is_zero() const { return zero_; }
    long val() const;
    long unit() const;
    int prec() const;
    // Unit residue mod p; needs prec >= 1 which the invariant guarantees.
    long residue(const PrimeContext& ctx) const;

    bool is_unit() const { return !zero_ && val_ == 0; }
    // Valuation >= 0 (integral), including zero.
    bool is_integral() const { return zero_ || val_ >= 0; }

  private:
    bool zero_;
    long val_;
    long unit_;  // reduced mod p^prec, in [1, p^prec), coprime to p
    int prec_;
};

PAdicElem padd(const PrimeContext& ctx, const PAdicElem& x, const PAdicElem& y);
PAdicElem pneg(const PrimeContext& ctx, const PAdicElem& x);
PAdicElem psub(const PrimeContext& ctx, const PAdicElem& x, const PAdicElem& y);
PAdicElem pmul(const PrimeContext& ctx, const PAdicElem& x, const PAdicElem& y);
PAdicElem pinv(const PrimeContext& ctx, const PAdicElem& x);
PAdicElem pdiv(const PrimeContext& ctx, const PAdicElem& x, const PAdicElem& y);

// Agreement at the common known precision (and equal valuation / zeroness).
bool peq(const PrimeContext& ctx, const PAdicElem& x, const PAdicElem& y);

std::string to_string(const PAdicElem& x);

// Cubic residue character on units: x -> iota(x^((p-1)/3) mod p).
// Throws std::domain_error unless x is a unit.
Mu3 cubic_residue(const PrimeContext& ctx, const PAdicElem& x);

// Tame cubic Hilbert symbol (a,b)_3, written additively in Z/3:
//   (a,b)_3 = residue_class( (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)} mod p ).
// Only residues mod p enter, so one known digit suffices.
// Throws std::domain_error if either argument is exactly zero.
Mu3 hilbert3(const PrimeContext& ctx, const PAdicElem& a, const PAdicElem& b);

}  // namespace cubic
