#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace avdc {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline int sign_of(const Rational& q) { return sgn(q); }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt floor_of(const Rational& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline BigInt ceil_of(const Rational& q) {
    BigInt c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
    return make_rational(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

// Nearest integer to q, ties rounded away from zero.
inline BigInt round_half_away(const Rational& q) {
    BigInt n = floor_of(q);
    Rational frac = q - Rational(n);
    if (frac > make_rational(1, 2)) return n + 1;
    if (frac < make_rational(1, 2)) return n;
    return sgn(q) >= 0 ? n + 1 : n;  // frac == 1/2
}

// Fixed-point decimal rendering with `digits` fractional digits.
inline std::string decimal_string(const Rational& q, unsigned digits) {
    BigInt scale = pow_int(BigInt(10), digits);
    BigInt n = round_half_away(Rational(scale) * q);
    bool neg = n < 0;
    if (neg) n = -n;
    BigInt ip = n / scale;
    BigInt fp = n % scale;
    std::string frac = fp.get_str();
    if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
    std::string out = (neg && n != 0 ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Closed rational interval, used for certified sign evaluation at an
// isolated algebraic number.
struct RatInterval {
    Rational lo, hi;

    RatInterval() = default;
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
    explicit RatInterval(const Rational& point) : lo(point), hi(point) {}

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    Rational width() const { return hi - lo; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }

    RatInterval operator*(const RatInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rational mn = a, mx = a;
        for (const Rational* v : {&b, &c, &d}) {
            if (*v < mn) mn = *v;
            if (*v > mx) mx = *v;
        }
        return {mn, mx};
    }

    RatInterval operator+(const Rational& r) const { return {lo + r, hi + r}; }
    RatInterval operator*(const Rational& r) const {
        if (sgn(r) >= 0) return {lo * r, hi * r};
        return {hi * r, lo * r};
    }
};

}  // namespace avdc
