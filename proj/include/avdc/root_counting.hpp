#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "avdc/rat_poly.hpp"

namespace avdc {

// Exact location of polynomial roots relative to the unit circle, using
// only rational arithmetic: Sturm-Tarski Cauchy indices along rectangle
// boundaries (argument principle) plus a palindromic-gcd test for roots
// of modulus exactly one.

namespace rc_detail {

// p(z0 + z1*t) for complex rational z0, z1, split into real and imaginary
// parts A(t), B(t).
inline std::pair<RatPoly, RatPoly> complex_line_substitution(
    const RatPoly& p, const Rational& x0, const Rational& y0, const Rational& dx,
    const Rational& dy) {
    RatPoly re_lin({x0, dx});  // Re(z0 + z1 t)
    RatPoly im_lin({y0, dy});  // Im(z0 + z1 t)
    RatPoly A, B;
    for (int k = p.degree(); k >= 0; --k) {
        // (A + iB) * (re_lin + i*im_lin) + c_k
        RatPoly nA = A * re_lin - B * im_lin + RatPoly::constant(p.coeff(k));
        RatPoly nB = A * im_lin + B * re_lin;
        A = std::move(nA);
        B = std::move(nB);
    }
    return {A, B};
}

// Cauchy index of A/B over [0,1] for one directed edge, or nullopt when the
// configuration is degenerate (root of p on the edge, or an endpoint pole).
inline std::optional<int> edge_index(const RatPoly& p, const Rational& x0, const Rational& y0,
                                     const Rational& x1, const Rational& y1) {
    auto [A, B] = complex_line_substitution(p, x0, y0, x1 - x0, y1 - y0);
    const Rational zero(0), one(1);
    RatPoly g = gcd(A, B);
    if (g.is_zero()) return std::nullopt;  // p identically zero on the edge
    if (g.degree() >= 1) {
        if (sgn(g.eval(zero)) == 0 || sgn(g.eval(one)) == 0) return std::nullopt;
        if (count_real_roots(g, zero, one) > 0) return std::nullopt;
    }
    if (B.is_zero()) {
        // p is real along the edge; no root on it means no argument change.
        if (sgn(A.eval(zero)) == 0 || sgn(A.eval(one)) == 0) return std::nullopt;
        if (A.degree() >= 1 && count_real_roots(A, zero, one) > 0) return std::nullopt;
        return 0;
    }
    if (sgn(B.eval(zero)) == 0 || sgn(B.eval(one)) == 0) return std::nullopt;
    return cauchy_index(B, A, zero, one);
}

}  // namespace rc_detail

struct Box {
    Rational x0, x1, y0, y1;

    Rational width() const { return x1 - x0; }
    Rational height() const { return y1 - y0; }

    // max_{z in box} |z|^2 (attained at a corner).
    Rational max_norm2() const {
        Rational mx = std::max(abs(x0), abs(x1));
        Rational my = std::max(abs(y0), abs(y1));
        return mx * mx + my * my;
    }
    // min_{z in box} |z|^2.
    Rational min_norm2() const {
        Rational dx = (sgn(x0) <= 0 && sgn(x1) >= 0) ? Rational(0) : std::min(abs(x0), abs(x1));
        Rational dy = (sgn(y0) <= 0 && sgn(y1) >= 0) ? Rational(0) : std::min(abs(y0), abs(y1));
        return dx * dx + dy * dy;
    }
};

// Number of roots of p (with multiplicity) strictly inside the box, or
// nullopt if a root lies on (or a degeneracy touches) the boundary.
inline std::optional<int> winding_number(const RatPoly& p, const Box& b) {
    if (p.degree() < 1) return 0;
    int total = 0;
    const Rational& x0 = b.x0;
    const Rational& x1 = b.x1;
    const Rational& y0 = b.y0;
    const Rational& y1 = b.y1;
    const Rational corners[4][4] = {
        {x0, y0, x1, y0},  // bottom
        {x1, y0, x1, y1},  // right
        {x1, y1, x0, y1},  // top
        {x0, y1, x0, y0},  // left
    };
    for (const auto& e : corners) {
        auto ind = rc_detail::edge_index(p, e[0], e[1], e[2], e[3]);
        if (!ind) return std::nullopt;
        total += *ind;
    }
    if (total % 2 != 0) throw std::logic_error("winding_number: odd index sum");
    return total / 2;
}

// Number of distinct roots of p with |z| = 1.
inline int circle_root_count(const RatPoly& p_in) {
    RatPoly p = squarefree_part(p_in).strip_zero_roots();
    if (p.degree() < 1) return 0;
    int count = 0;
    if (sgn(p.eval(Rational(1))) == 0) ++count;
    if (sgn(p.eval(Rational(-1))) == 0) ++count;
    RatPoly g = gcd(p, p.reversed());
    // Remove the factors x-1 and x+1 (multiplicity one each: p squarefree).
    for (const Rational r : {Rational(1), Rational(-1)}) {
        if (g.degree() >= 1 && sgn(g.eval(r)) == 0)
            g = divmod(g, RatPoly({-r, Rational(1)})).first;
    }
    if (g.degree() < 2) return count;
    int two_m = g.degree();
    if (two_m % 2 != 0) throw std::logic_error("circle_root_count: odd symmetric factor");
    int m = two_m / 2;
    // g/x^m = a_m + sum_{k>=1} a_{m+k} (x^k + x^-k); substitute t = x + 1/x
    // via V_0 = 2, V_1 = t, V_k = t V_{k-1} - V_{k-2}.
    std::vector<RatPoly> V(m + 1);
    V[0] = RatPoly::constant(Rational(2));
    if (m >= 1) V[1] = RatPoly::x();
    for (int k = 2; k <= m; ++k) V[k] = RatPoly::x() * V[k - 1] - V[k - 2];
    RatPoly h = RatPoly::constant(g.coeff(m));
    for (int k = 1; k <= m; ++k) h = h + V[k] * g.coeff(m + k);
    if (h.degree() >= 1) {
        if (sgn(h.eval(Rational(2))) == 0 || sgn(h.eval(Rational(-2))) == 0)
            throw std::logic_error("circle_root_count: unexpected root at t = +-2");
        count += 2 * count_real_roots(h, Rational(-2), Rational(2));
    }
    return count;
}

namespace rc_detail {

// Split positions to try when a boundary hits a root: midpoint first, then
// deterministic offsets with odd denominators.
inline std::vector<Rational> split_candidates(const Rational& lo, const Rational& hi) {
    std::vector<Rational> out;
    Rational mid = (lo + hi) / 2;
    Rational w = hi - lo;
    out.push_back(mid);
    for (int k = 1; k <= 40; ++k) {
        Rational off = w * make_rational(k, 128 * (2 * k + 1));
        out.push_back(mid + off);
        out.push_back(mid - off);
    }
    return out;
}

}  // namespace rc_detail

// Number of roots of p (with multiplicity) with |z| < 1. Requires that p has
// no root with |z| = 1 exactly (check circle_root_count first).
inline int count_roots_in_unit_disk(const RatPoly& p) {
    if (p.degree() < 1) return 0;
    Rational bound = cauchy_root_bound(p) + 1;
    std::optional<int> w0;
    Box start{-bound, bound, -bound, bound};
    for (int k = 0; k < 64 && !w0; ++k) {
        Rational b = bound + make_rational(k, 2 * k + 3);
        start = Box{-b, b, -b, b};
        w0 = winding_number(p, start);
    }
    if (!w0) throw std::logic_error("count_roots_in_unit_disk: no valid bounding box");

    const Rational one(1);
    int total = 0;
    std::vector<std::pair<Box, int>> stack{{start, *w0}};
    while (!stack.empty()) {
        auto [box, w] = stack.back();
        stack.pop_back();
        if (w == 0) continue;
        if (box.min_norm2() >= one) continue;  // disjoint from the open disk
        if (box.max_norm2() <= one) {
            total += w;
            continue;
        }
        bool vertical_cut = box.width() >= box.height();
        bool done = false;
        auto lo = vertical_cut ? box.x0 : box.y0;
        auto hi = vertical_cut ? box.x1 : box.y1;
        for (const Rational& cut : rc_detail::split_candidates(lo, hi)) {
            Box a = box, b = box;
            if (vertical_cut) {
                a.x1 = cut;
                b.x0 = cut;
            } else {
                a.y1 = cut;
                b.y0 = cut;
            }
            auto wa = winding_number(p, a);
            if (!wa) continue;
            auto wb = winding_number(p, b);
            if (!wb) continue;
            if (*wa + *wb != w) throw std::logic_error("count_roots_in_unit_disk: split mismatch");
            stack.push_back({a, *wa});
            stack.push_back({b, *wb});
            done = true;
            break;
        }
        if (!done) throw std::logic_error("count_roots_in_unit_disk: no valid split found");
    }
    return total;
}

// Number of roots of p (with multiplicity) with |z| > 1; same precondition.
inline int count_roots_outside_unit_disk(const RatPoly& p) {
    RatPoly q = p.strip_zero_roots();
    if (q.degree() < 1) return 0;
    return count_roots_in_unit_disk(q.reversed());
}

// Exactly one root of modulus >= 1, and that root is real, simple and > 1.
inline bool is_pisot_poly(const RatPoly& p_in) {
    RatPoly p = p_in.strip_zero_roots();
    if (p.degree() < 1) return false;
    if (circle_root_count(p) > 0) return false;
    if (count_roots_outside_unit_disk(p) != 1) return false;
    // The lone outside root has multiplicity one and cannot be complex
    // (conjugates pair up); it remains to rule out a root below -1.
    return count_real_roots_above(p, Rational(1)) == 1;
}

}  // namespace avdc
