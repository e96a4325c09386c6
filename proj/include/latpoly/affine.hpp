#pragma once

#include <array>

#include "latpoly/geometry.hpp"

namespace latpoly {

/// x |-> U x + z with U an integer matrix of determinant +-1 and z integral.
/// These are exactly the maps under which lattice-point statistics are
/// preserved, so composition and inversion stay inside the type.
struct UnimodularAffineMap {
    // row-major: [[a, b], [c, d]]
    BigInt a{1}, b{0}, c{0}, d{1};
    BigInt tx{0}, ty{0};

    UnimodularAffineMap() = default;
    UnimodularAffineMap(BigInt a_, BigInt b_, BigInt c_, BigInt d_, BigInt tx_ = 0, BigInt ty_ = 0)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)),
          tx(std::move(tx_)), ty(std::move(ty_)) {
        const BigInt det = this->a * this->d - this->b * this->c;
        if (det != 1 && det != -1) throw DomainError("matrix determinant must be +-1");
    }

    static UnimodularAffineMap translation(BigInt dx, BigInt dy) {
        return UnimodularAffineMap(1, 0, 0, 1, std::move(dx), std::move(dy));
    }

    BigInt det() const { return a * d - b * c; }

    Point operator()(const Point& p) const {
        return Point{a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }

    /// this after other: (this*other)(x) = this(other(x)).
    UnimodularAffineMap compose(const UnimodularAffineMap& o) const {
        UnimodularAffineMap r;
        r.a = a * o.a + b * o.c;
        r.b = a * o.b + b * o.d;
        r.c = c * o.a + d * o.c;
        r.d = c * o.b + d * o.d;
        r.tx = a * o.tx + b * o.ty + tx;
        r.ty = c * o.tx + d * o.ty + ty;
        return r;
    }

    UnimodularAffineMap inverse() const {
        const BigInt s = det(); // +-1, and 1/s == s
        UnimodularAffineMap r;
        r.a = s * d;
        r.b = s * -b;
        r.c = s * -c;
        r.d = s * a;
        r.tx = -(r.a * tx + r.b * ty);
        r.ty = -(r.c * tx + r.d * ty);
        return r;
    }

    friend bool operator==(const UnimodularAffineMap&, const UnimodularAffineMap&) = default;
};

/// Image polygon; re-normalizes the vertex cycle to CCW when det = -1.
inline Polygon apply_map(const Polygon& poly, const UnimodularAffineMap& m) {
    std::vector<Point> verts;
    verts.reserve(poly.size());
    for (const Point& p : poly.vertices()) verts.push_back(m(p));
    if (m.det() < 0) std::reverse(verts.begin(), verts.end());
    return Polygon(std::move(verts));
}

} // namespace latpoly
