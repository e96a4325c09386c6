#pragma once

// Test-only oracles and generators. The counting oracle here deliberately
// avoids the library's per-edge gcd and scanline code paths: it scans the
// whole bounding box of integer points and classifies each one by exact sign
// tests, so the two implementations can confirm each other.

#include <random>
#include <vector>

#include "latpoly/affine.hpp"
#include "latpoly/geometry.hpp"
#include "latpoly/rational.hpp"

namespace latpoly::testing {

inline Polygon poly(std::initializer_list<std::pair<const char*, const char*>> verts) {
    std::vector<Point> pts;
    for (const auto& [x, y] : verts) pts.push_back(Point{parse_rat(x), parse_rat(y)});
    return Polygon(std::move(pts));
}

inline Point pt(const char* x, const char* y) { return Point{parse_rat(x), parse_rat(y)}; }

/// +1 strictly inside, 0 on the boundary, -1 outside.
inline int oracle_location(const Polygon& p, const Point& q) {
    const auto& v = p.vertices();
    bool on_boundary = false;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const Rat c = cross(v[j], v[(j + 1) % v.size()], q);
        if (c < 0) return -1;
        if (c == 0) on_boundary = true;
    }
    return on_boundary ? 0 : 1;
}

/// (interior, boundary) lattice point counts by brute-force grid scan.
inline std::pair<BigInt, BigInt> oracle_counts(const Polygon& p) {
    Rat xmin = p[0].x, xmax = p[0].x, ymin = p[0].y, ymax = p[0].y;
    for (const Point& q : p.vertices()) {
        if (q.x < xmin) xmin = q.x;
        if (q.x > xmax) xmax = q.x;
        if (q.y < ymin) ymin = q.y;
        if (q.y > ymax) ymax = q.y;
    }
    BigInt interior = 0, boundary = 0;
    for (BigInt x = rat_ceil(xmin); x <= rat_floor(xmax); ++x) {
        for (BigInt y = rat_ceil(ymin); y <= rat_floor(ymax); ++y) {
            const int loc = oracle_location(p, Point{Rat(x), Rat(y)});
            if (loc > 0) ++interior;
            if (loc == 0) ++boundary;
        }
    }
    return {interior, boundary};
}

/// Random polygon with coordinates in (1/k)Z intersected with a small box.
/// Returns nullopt-like retry loop internally; always yields a valid Polygon.
inline Polygon random_polygon(std::mt19937_64& rng, int k, int span = 6, int max_points = 7) {
    std::uniform_int_distribution<int> coord(-span * k, span * k);
    std::uniform_int_distribution<int> npts(3, max_points);
    for (;;) {
        std::vector<Point> pts;
        const int n = npts(rng);
        for (int j = 0; j < n; ++j) pts.push_back(Point{Rat(coord(rng), k), Rat(coord(rng), k)});
        Hull h = convex_hull(pts);
        if (h.is_polygon()) return h.polygon();
    }
}

inline UnimodularAffineMap random_unimodular(std::mt19937_64& rng, int shear_span = 4,
                                             int translate_span = 30) {
    std::uniform_int_distribution<int> shear(-shear_span, shear_span);
    std::uniform_int_distribution<int> tr(-translate_span, translate_span);
    std::uniform_int_distribution<int> coin(0, 1);
    // product of elementary shears lands on a fairly generic unimodular matrix
    UnimodularAffineMap m(1, shear(rng), 0, 1);
    m = m.compose(UnimodularAffineMap(1, 0, shear(rng), 1));
    m = m.compose(UnimodularAffineMap(1, shear(rng), 0, 1));
    if (coin(rng)) m = m.compose(UnimodularAffineMap(0, 1, 1, 0)); // reflection
    m.tx = tr(rng);
    m.ty = tr(rng);
    return m;
}

} // namespace latpoly::testing
