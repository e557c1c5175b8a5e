#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "avdc/rational.hpp"

namespace avdc {

// Dense univariate polynomial over Q, coefficients little-endian
// (c[k] is the coefficient of x^k). The zero polynomial has no
// coefficients and degree -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static RatPoly constant(const Rational& a) { return RatPoly({a}); }
    static RatPoly x() { return RatPoly({Rational(0), Rational(1)}); }

    static RatPoly from_int_coeffs(const std::vector<BigInt>& coeffs) {
        std::vector<Rational> v;
        v.reserve(coeffs.size());
        for (const BigInt& z : coeffs) v.emplace_back(z);
        return RatPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[k];
    }
    const Rational& leading() const {
        if (c_.empty()) throw std::logic_error("leading() of zero polynomial");
        return c_.back();
    }

    Rational eval(const Rational& x) const {
        Rational v(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    RatInterval eval_interval(const RatInterval& x) const {
        RatInterval v(Rational(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + RatInterval(*it);
        return v;
    }

    RatPoly derivative() const {
        if (c_.size() <= 1) return RatPoly();
        std::vector<Rational> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
        return RatPoly(std::move(d));
    }

    RatPoly operator-() const {
        std::vector<Rational> v(c_);
        for (auto& a : v) a = -a;
        return RatPoly(std::move(v));
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
        return RatPoly(std::move(v));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(v));
    }

    friend RatPoly operator*(const RatPoly& a, const Rational& s) {
        std::vector<Rational> v(a.c_);
        for (auto& x : v) x *= s;
        return RatPoly(std::move(v));
    }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    // Euclidean division: returns {quotient, remainder}.
    friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
        if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
        RatPoly r = a;
        std::vector<Rational> q;
        if (a.degree() >= b.degree()) q.assign(a.degree() - b.degree() + 1, Rational(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            Rational f = r.leading() / b.leading();
            q[shift] = f;
            std::vector<Rational> rv = r.c_;
            for (size_t k = 0; k < b.c_.size(); ++k) rv[k + shift] -= f * b.c_[k];
            rv.pop_back();
            r = RatPoly(std::move(rv));
        }
        return {RatPoly(std::move(q)), r};
    }

    RatPoly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading());
    }

    // x^n * p(1/x) for p with nonzero constant term (coefficient reversal).
    RatPoly reversed() const {
        if (is_zero()) return *this;
        if (sgn(c_.front()) == 0)
            throw std::invalid_argument("reversed(): zero constant term");
        std::vector<Rational> v(c_.rbegin(), c_.rend());
        return RatPoly(std::move(v));
    }

    // Number of trailing zero coefficients = multiplicity of the root 0.
    int zero_root_multiplicity() const {
        int k = 0;
        while (k < static_cast<int>(c_.size()) && sgn(c_[k]) == 0) ++k;
        return is_zero() ? 0 : k;
    }

    RatPoly strip_zero_roots() const {
        int k = zero_root_multiplicity();
        if (k == 0) return *this;
        return RatPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational& a = c_[k];
            if (sgn(a) == 0) continue;
            Rational mag = abs(a);
            if (out.empty())
                out += (sgn(a) < 0) ? "-" : "";
            else
                out += (sgn(a) < 0) ? "-" : "+";
            bool unit = (mag == 1);
            if (k == 0 || !unit) out += mag.get_str();
            if (k > 0) {
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly f = a, g = b;
    while (!g.is_zero()) {
        RatPoly r = divmod(f, g).second;
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic();
}

// g = gcd(a,b) together with u,v such that u*a + v*b = g.
struct ExtGcd {
    RatPoly g, u, v;
};

inline ExtGcd ext_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly u0 = RatPoly::constant(Rational(1)), u1;
    RatPoly v0, v1 = RatPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly u2 = u0 - q * u1;
        RatPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (!r0.is_zero()) {
        Rational inv = Rational(1) / r0.leading();
        return {r0 * inv, u0 * inv, v0 * inv};
    }
    return {r0, u0, v0};
}

inline RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : p.monic();
    RatPoly g = gcd(p, p.derivative());
    if (g.degree() <= 0) return p.monic();
    return divmod(p, g).first.monic();
}

// ---------------------------------------------------------------------------
// Signed remainder sequences, Sturm/Sturm-Tarski machinery
// ---------------------------------------------------------------------------

// S0 = p, S1 = q, S_{k+1} = -rem(S_{k-1}, S_k).
inline std::vector<RatPoly> signed_remainder_chain(const RatPoly& p, const RatPoly& q) {
    std::vector<RatPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    if (q.is_zero()) return chain;
    chain.push_back(q);
    while (!chain.back().is_zero()) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        RatPoly r = -divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(r);
    }
    return chain;
}

inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    return signed_remainder_chain(p, p.derivative());
}

inline int sign_variations(const std::vector<int>& signs) {
    int var = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

inline int variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const RatPoly& f : chain) signs.push_back(sgn(f.eval(x)));
    return sign_variations(signs);
}

// Sign of f at +infinity (dir > 0) or -infinity (dir < 0).
inline int sign_at_infinity(const RatPoly& f, int dir) {
    if (f.is_zero()) return 0;
    int s = sgn(f.leading());
    if (dir < 0 && (f.degree() % 2 == 1)) s = -s;
    return s;
}

inline int variations_at_infinity(const std::vector<RatPoly>& chain, int dir) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const RatPoly& f : chain) signs.push_back(sign_at_infinity(f, dir));
    return sign_variations(signs);
}

// Number of distinct real roots of p in the open interval (a, b).
// Requires p(a) != 0 and p(b) != 0.
inline int count_real_roots(const RatPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    if (sgn(p.eval(a)) == 0 || sgn(p.eval(b)) == 0)
        throw std::invalid_argument("count_real_roots: root at interval endpoint");
    if (!(a < b)) return 0;
    auto chain = sturm_chain(p);
    return variations_at(chain, a) - variations_at(chain, b);
}

inline int count_real_roots_above(const RatPoly& p, const Rational& a) {
    if (sgn(p.eval(a)) == 0)
        throw std::invalid_argument("count_real_roots_above: root at endpoint");
    auto chain = sturm_chain(p);
    return variations_at(chain, a) - variations_at_infinity(chain, +1);
}

inline int count_real_roots_all(const RatPoly& p) {
    auto chain = sturm_chain(p);
    return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

// Upper bound on |root| for all complex roots: 1 + max |c_k| / |lead|.
inline Rational cauchy_root_bound(const RatPoly& p) {
    if (p.degree() < 1) return Rational(1);
    Rational m(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rational a = abs(p.coeff(k));
        if (a > m) m = a;
    }
    return Rational(1) + m / abs(p.leading());
}

// Cauchy index of q/p over (a, b): sum over poles x0 in (a,b) of
// +1 where q/p jumps -inf -> +inf and -1 where it jumps +inf -> -inf.
// Requires p(a) != 0 and p(b) != 0.
inline int cauchy_index(const RatPoly& p, const RatPoly& q, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_index: zero denominator polynomial");
    if (sgn(p.eval(a)) == 0 || sgn(p.eval(b)) == 0)
        throw std::invalid_argument("cauchy_index: pole at endpoint");
    if (q.is_zero()) return 0;
    auto chain = signed_remainder_chain(p, q);
    return variations_at(chain, a) - variations_at(chain, b);
}

// ---------------------------------------------------------------------------
// Real root isolation
// ---------------------------------------------------------------------------

// Isolating interval (lo, hi) with p(lo), p(hi) != 0 containing exactly one
// real root of p; for rational roots lo == hi == root is used instead.
struct RootInterval {
    Rational lo, hi;
    bool exact = false;  // lo == hi == the root itself
};

namespace detail {

inline void out_around_rational_root(const RatPoly& p, const std::vector<RatPoly>& chain,
                                     const Rational& a, const Rational& b, const Rational& mid,
                                     std::vector<RootInterval>& out);

// Splits (a,b) known to contain `count` >= 1 distinct roots of squarefree p
// into isolating intervals, appended to `out` in increasing order.
inline void isolate_rec(const RatPoly& p, const std::vector<RatPoly>& chain,
                        const Rational& a, const Rational& b, int count,
                        std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({a, b, false});
        return;
    }
    Rational mid = (a + b) / 2;
    if (sgn(p.eval(mid)) == 0) {
        // mid itself is a (rational) root: emit it exactly and recurse around it.
        out_around_rational_root(p, chain, a, b, mid, out);
        return;
    }
    int left = variations_at(chain, a) - variations_at(chain, mid);
    int right = count - left;
    isolate_rec(p, chain, a, mid, left, out);
    isolate_rec(p, chain, mid, b, right, out);
}

}  // namespace detail

inline std::vector<RootInterval> isolate_real_roots(const RatPoly& p_in) {
    RatPoly p = squarefree_part(p_in);
    if (p.degree() < 1) return {};
    Rational bound = cauchy_root_bound(p);
    Rational a = -bound, b = bound;
    while (sgn(p.eval(a)) == 0) a -= 1;
    while (sgn(p.eval(b)) == 0) b += 1;
    auto chain = sturm_chain(p);
    int count = variations_at(chain, a) - variations_at(chain, b);
    std::vector<RootInterval> out;
    detail::isolate_rec(p, chain, a, b, count, out);
    return out;
}

namespace detail {

inline void out_around_rational_root(const RatPoly& p, const std::vector<RatPoly>& chain,
                                     const Rational& a, const Rational& b, const Rational& mid,
                                     std::vector<RootInterval>& out) {
    // Shrink a window around mid until it isolates just this root.
    Rational eps = (b - a) / 4;
    Rational lo = mid - eps, hi = mid + eps;
    auto count_open = [&](const Rational& x, const Rational& y) {
        return variations_at(chain, x) - variations_at(chain, y);
    };
    for (;;) {
        if (lo > a && hi < b && sgn(p.eval(lo)) != 0 && sgn(p.eval(hi)) != 0 &&
            count_open(lo, hi) == 1)
            break;
        eps /= 2;
        lo = mid - eps;
        hi = mid + eps;
    }
    int left = count_open(a, lo);
    isolate_rec(p, chain, a, lo, left, out);
    out.push_back({mid, mid, true});
    int right = count_open(hi, b);
    isolate_rec(p, chain, hi, b, right, out);
}

}  // namespace detail

}  // namespace avdc
