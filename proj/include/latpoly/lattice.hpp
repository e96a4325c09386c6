#pragma once

#include <map>
#include <optional>
#include <vector>

#include "latpoly/geometry.hpp"

namespace latpoly {

/// Closed horizontal slice P cap (R x {y}) as [x_left, x_right]; nullopt when
/// the line misses P. A single touch point comes back with x_left == x_right.
inline std::optional<std::pair<Rat, Rat>> slice_at(const Polygon& poly, const Rat& y) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    bool hit = false;
    Rat lo, hi;
    auto take = [&](const Rat& x) {
        if (!hit) {
            lo = hi = x;
            hit = true;
        } else {
            if (x < lo) lo = x;
            if (x > hi) hi = x;
        }
    };
    for (std::size_t j = 0; j < n; ++j) {
        const Point& a = v[j];
        const Point& b = v[(j + 1) % n];
        if (a.y == y) take(a.x);
        if ((a.y < y && b.y > y) || (a.y > y && b.y < y)) {
            // strict crossing: x = ax + (y-ay) * dx/dy
            take(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
        }
    }
    if (!hit) return std::nullopt;
    return std::make_pair(lo, hi);
}

/// Number of integral points on the closed segment [a, b], a != b. For
/// integral endpoints this is gcd(|dx|, |dy|) + 1.
inline BigInt segment_lattice_count(const Point& a, const Point& b) {
    if (a == b) throw DomainError("segment endpoints must be distinct");
    // Scale so the segment is integral, then count points of L*Z^2 on it.
    BigInt scale = big_lcm(big_lcm(den(a.x), den(a.y)), big_lcm(den(b.x), den(b.y)));
    const BigInt ax = num(a.x) * (scale / den(a.x));
    const BigInt ay = num(a.y) * (scale / den(a.y));
    const BigInt bx = num(b.x) * (scale / den(b.x));
    const BigInt by = num(b.y) * (scale / den(b.y));
    const BigInt dx = bx - ax, dy = by - ay;
    const BigInt g = big_gcd(abs(dx), abs(dy));
    const BigInt ux = dx / g, uy = dy / g;
    if (scale == 1) return g + 1;

    // Points on the segment are a + j*u for j = 0..g; we need the unique
    // residue class j mod L with j*u == -a (mod L), if it exists. Because u
    // is primitive, alpha*ux + beta*uy = 1 pins j == -(alpha*ax + beta*ay).
    BigInt alpha, beta, g2;
    {
        // extended gcd for (ux, uy)
        BigInt old_r = ux, r = uy, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            BigInt q = old_r / r;
            BigInt tmp = old_r - q * r; old_r = r; r = tmp;
            tmp = old_s - q * s; old_s = s; s = tmp;
            tmp = old_t - q * t; old_t = t; t = tmp;
        }
        g2 = old_r; alpha = old_s; beta = old_t;
        if (g2 < 0) { g2 = -g2; alpha = -alpha; beta = -beta; }
    }
    BigInt j0 = (-(alpha * ax + beta * ay)) % scale;
    if (j0 < 0) j0 += scale;
    // the system may still be inconsistent; verify both congruences
    if ((ax + j0 * ux) % scale != 0 || (ay + j0 * uy) % scale != 0) return 0;
    if (j0 > g) return 0;
    return (g - j0) / scale + 1;
}

inline bool is_lattice_point(const Point& p) { return is_integer(p.x) && is_integer(p.y); }

/// Convex hull of all lattice points contained in P (boundary included).
inline Hull integer_hull(const Polygon& poly) {
    Rat ymin = poly[0].y, ymax = poly[0].y;
    for (const Point& p : poly.vertices()) {
        if (p.y < ymin) ymin = p.y;
        if (p.y > ymax) ymax = p.y;
    }
    std::vector<Point> extremes;
    for (BigInt j = rat_ceil(ymin); j <= rat_floor(ymax); ++j) {
        const Rat y(j);
        auto s = slice_at(poly, y);
        if (!s) continue;
        const BigInt xl = rat_ceil(s->first), xr = rat_floor(s->second);
        if (xl > xr) continue;
        extremes.push_back(Point{Rat(xl), y});
        if (xr != xl) extremes.push_back(Point{Rat(xr), y});
    }
    return convex_hull(extremes);
}

/// The tuple the paper's inequalities are stated in: interior count i,
/// boundary count b, denominator k, exact area, Area_k at k = denominator,
/// and the dimension of the integer hull.
struct LatticeStats {
    BigInt interior;   // i
    BigInt boundary;   // b
    BigInt k;          // denominator
    Rat area;
    BigInt area_k;     // 2k^2 * area
    int hull_dim;      // dim conv(P cap Z^2): -1, 0, 1 or 2

    BigInt total() const { return interior + boundary; }
};

/// Exact counts: boundary per edge with vertex deduplication, interior by
/// scanline over the integral rows crossing the interior.
inline LatticeStats lattice_stats(const Polygon& poly) {
    LatticeStats st;
    const auto& v = poly.vertices();
    const std::size_t n = v.size();

    BigInt boundary = 0;
    for (std::size_t j = 0; j < n; ++j) {
        boundary += segment_lattice_count(v[j], v[(j + 1) % n]);
        if (is_lattice_point(v[j])) --boundary; // shared by two closed edges
    }
    st.boundary = boundary;

    Rat ymin = v[0].y, ymax = v[0].y;
    for (const Point& p : v) {
        if (p.y < ymin) ymin = p.y;
        if (p.y > ymax) ymax = p.y;
    }
    BigInt interior = 0;
    for (BigInt j = rat_floor(ymin) + 1; j < ymax; ++j) {
        auto s = slice_at(poly, Rat(j));
        if (!s) continue;
        // integers strictly inside (xl, xr)
        const BigInt c = rat_ceil(s->second) - rat_floor(s->first) - 1;
        if (c > 0) interior += c;
    }
    st.interior = interior;

    st.k = polygon_denominator(poly);
    st.area = polygon_area(poly);
    st.area_k = normalized_area(poly, st.k);
    st.hull_dim = integer_hull(poly).dim();
    return st;
}

/// |tP cap Z^2| for t >= 1.
inline BigInt ehrhart_count(const Polygon& poly, const BigInt& t) {
    if (t < 1) throw DomainError("ehrhart_count needs t >= 1");
    const Polygon dilated = scale(poly, Rat(t));
    const LatticeStats st = lattice_stats(dilated);
    return st.total();
}

/// Horizontal-line profile of a polygon the caller has already positioned:
/// slice lengths at requested heights, per-row boundary and interior counts,
/// and the number n of integral rows meeting the interior.
struct StripProfile {
    BigInt n{0};
    std::map<Rat, Rat> lengths;          // queried height -> slice length (0 if missed)
    std::map<BigInt, BigInt> boundary_counts; // integral row j -> b_j
    std::map<BigInt, BigInt> interior_counts; // integral row j -> i_j
};

inline StripProfile strip_profile(const Polygon& poly, const std::vector<Rat>& heights) {
    StripProfile prof;
    Rat ymin = poly[0].y, ymax = poly[0].y;
    for (const Point& p : poly.vertices()) {
        if (p.y < ymin) ymin = p.y;
        if (p.y > ymax) ymax = p.y;
    }
    for (const Rat& y : heights) {
        auto s = slice_at(poly, y);
        prof.lengths[y] = s ? s->second - s->first : Rat(0);
    }
    for (BigInt j = rat_ceil(ymin); j <= rat_floor(ymax); ++j) {
        const Rat y(j);
        auto s = slice_at(poly, y);
        if (!s) continue;
        const Rat xl = s->first, xr = s->second;
        BigInt bj = 0, ij = 0;
        if (y == ymin || y == ymax) {
            // the whole slice lies on the boundary
            bj = rat_floor(xr) - rat_ceil(xl) + 1;
            if (bj < 0) bj = 0;
        } else {
            if (is_integer(xl)) ++bj;
            if (is_integer(xr) && xr != xl) ++bj;
            ij = rat_ceil(xr) - rat_floor(xl) - 1;
            if (ij < 0) ij = 0;
            if (xl < xr) ++prof.n;
        }
        if (bj != 0) prof.boundary_counts[j] = bj;
        if (ij != 0) prof.interior_counts[j] = ij;
    }
    return prof;
}

} // namespace latpoly
