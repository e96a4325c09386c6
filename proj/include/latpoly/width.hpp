#pragma once

#include <utility>
#include <vector>

#include "latpoly/affine.hpp"
#include "latpoly/geometry.hpp"

namespace latpoly {

/// Integer direction, usually primitive.
struct Dir {
    BigInt x;
    BigInt y;
    friend bool operator==(const Dir&, const Dir&) = default;
};

inline bool dir_lex_less(const Dir& a, const Dir& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

/// width_w(P) = max <w,v> - min <w,v> over P.
inline Rat width(const Polygon& poly, const Dir& w) {
    if (w.x == 0 && w.y == 0) throw DomainError("width direction must be nonzero");
    Rat lo, hi;
    bool first = true;
    for (const Point& p : poly.vertices()) {
        const Rat s = w.x * p.x + w.y * p.y;
        if (first) {
            lo = hi = s;
            first = false;
        } else {
            if (s < lo) lo = s;
            if (s > hi) hi = s;
        }
    }
    return hi - lo;
}

namespace detail {

/// Certified search radius: for independent difference vectors u1, u2 of P,
/// any w with width_w(P) <= cap satisfies
///   |w|_inf <= cap * (|u1|_inf + |u2|_inf) / |det(u1, u2)|,
/// because width_w dominates both |<w,u1>| and |<w,u2>|, and w is recovered
/// from those two pairings by Cramer's rule. Minimized over the consecutive
/// vertex triples so a single flat triple cannot inflate the radius.
inline Rat direction_radius(const Polygon& poly, const Rat& cap) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    Rat best;
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
        const Point& a = v[j];
        const Point& b = v[(j + 1) % n];
        const Point& c = v[(j + 2) % n];
        const Rat u1x = b.x - a.x, u1y = b.y - a.y;
        const Rat u2x = c.x - a.x, u2y = c.y - a.y;
        Rat det = u1x * u2y - u1y * u2x;
        if (det < 0) det = -det;
        auto inf = [](const Rat& p, const Rat& q) { return abs(p) > abs(q) ? abs(p) : abs(q); };
        const Rat radius = (inf(u1x, u1y) + inf(u2x, u2y)) / det;
        if (first || radius < best) {
            best = radius;
            first = false;
        }
    }
    return cap * best;
}

/// Visits every primitive direction with |w|_inf == m and positive first
/// nonzero entry.
template <class F>
void for_each_primitive_on_ring(const BigInt& m, F&& fn) {
    if (m == 1) {
        fn(Dir{0, 1});
        fn(Dir{1, -1});
        fn(Dir{1, 0});
        fn(Dir{1, 1});
        return;
    }
    for (BigInt t = -m; t <= m; ++t) {
        if (big_gcd(m, abs(t)) != 1) continue;
        fn(Dir{m, t});       // right edge of the ring
        if (t > 0) fn(Dir{t, m});   // top edge
        if (t < 0) fn(Dir{-t, -m}); // bottom edge, flipped into the canonical half
    }
}

} // namespace detail

/// Minimal width over nonzero integer directions, with one achieving
/// direction. Ties break to the lexicographically smallest primitive
/// direction whose first nonzero entry is positive. The ring search keeps
/// re-deriving the certified radius from the incumbent, so it collapses
/// quickly even when the initial incumbent is poor.
inline std::pair<Rat, Dir> lattice_width(const Polygon& poly) {
    Rat best = width(poly, Dir{0, 1});
    Dir best_dir{0, 1};
    auto consider = [&](const Dir& w) {
        const Rat v = width(poly, w);
        if (v < best || (v == best && dir_lex_less(w, best_dir))) {
            best = v;
            best_dir = w;
        }
    };
    consider(Dir{1, -1});
    consider(Dir{1, 0});
    consider(Dir{1, 1});

    Rat radius = detail::direction_radius(poly, best);
    for (BigInt m = 1; m <= radius; ++m) {
        detail::for_each_primitive_on_ring(m, consider);
        const Rat shrunk = detail::direction_radius(poly, best);
        if (shrunk < radius) radius = shrunk;
    }
    return {best, best_dir};
}

/// All lattice width directions (primitive, positive first nonzero entry),
/// sorted lexicographically.
inline std::vector<Dir> lattice_width_directions(const Polygon& poly) {
    const auto [lw, ignored] = lattice_width(poly);
    std::vector<Dir> out;
    const Rat radius = detail::direction_radius(poly, lw);
    for (BigInt m = 1; m <= radius; ++m)
        detail::for_each_primitive_on_ring(m, [&](const Dir& w) {
            if (width(poly, w) == lw) out.push_back(w);
        });
    std::sort(out.begin(), out.end(), dir_lex_less);
    return out;
}

/// A placement of P into the horizontal strip R x [lo, hi]: a primitive
/// direction sent to (0,1) plus the integral vertical translation.
struct StripPlacement {
    Dir w;
    BigInt shift;
};

/// Every way to realize P, up to equivalence, inside R x [lo, hi]: primitive
/// directions of width at most hi - lo combined with each feasible integral
/// shift.
inline std::vector<StripPlacement> strip_placements(const Polygon& poly, const Rat& lo,
                                                    const Rat& hi) {
    std::vector<StripPlacement> out;
    const Rat cap = hi - lo;
    if (cap < 0) return out;
    const Rat radius = detail::direction_radius(poly, cap);
    for (BigInt m = 1; m <= radius; ++m) {
        detail::for_each_primitive_on_ring(m, [&](const Dir& w) {
            Rat smin, smax;
            bool first = true;
            for (const Point& p : poly.vertices()) {
                const Rat s = w.x * p.x + w.y * p.y;
                if (first) {
                    smin = smax = s;
                    first = false;
                } else {
                    if (s < smin) smin = s;
                    if (s > smax) smax = s;
                }
            }
            if (smax - smin > cap) return;
            for (BigInt t = rat_ceil(lo - smin); t <= rat_floor(hi - smax); ++t)
                out.push_back(StripPlacement{w, t});
            // the mirrored direction gives the upside-down placements
            for (BigInt t = rat_ceil(lo + smax); t <= rat_floor(hi + smin); ++t)
                out.push_back(StripPlacement{Dir{-w.x, -w.y}, t});
        });
    }
    return out;
}

inline bool realizable_in_strip(const Polygon& poly, const Rat& lo, const Rat& hi) {
    return !strip_placements(poly, lo, hi).empty();
}

/// Applies a strip placement: a unimodular map with second row w followed by
/// the vertical shift, so the image satisfies lo <= y <= hi.
inline Polygon position_in_strip(const Polygon& poly, const StripPlacement& placement) {
    const BigInt wx = placement.w.x, wy = placement.w.y;
    // first row (a, b) with a*wy - b*wx = 1
    BigInt old_r = wy, r = wx, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    // old_r = gcd = old_s*wy + old_t*wx, normalized to +1
    BigInt a = old_s, b = -old_t;
    if (old_r < 0) { a = -a; b = -b; }
    UnimodularAffineMap m(a, b, wx, wy, 0, placement.shift);
    return apply_map(poly, m);
}

} // namespace latpoly
