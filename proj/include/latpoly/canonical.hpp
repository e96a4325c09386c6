#pragma once

#include <array>
#include <vector>

#include "latpoly/affine.hpp"
#include "latpoly/geometry.hpp"

namespace latpoly {
namespace detail {

template <class I>
I int_gcd(I a, I b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        I t = a % b;
        a = b;
        b = t;
    }
    return a;
}

template <class I>
I floor_div(const I& a, const I& b) { // b > 0
    I q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

template <class I>
I pos_mod(const I& a, const I& b) { // b > 0
    I r = a % b;
    if (r < 0) r += b;
    return r;
}

/// Translation-restricted normal form of an integral polygon.
///
/// Input: CCW integral vertices of Q = kP, and the modulus k. Two such
/// polygons have equal normal forms exactly when Q' = U Q + c for some
/// integer matrix U with det = +-1 and c in k*Z^2, i.e. when the underlying
/// rational polygons P = Q/k are affine unimodular equivalent.
///
/// One representative per flag (start vertex, traversal direction): the flag
/// vertex moves to the origin, the flag edge's primitive direction maps to
/// (1,0) with the determinant sign that restores CCW, the residual shear is
/// pinned by reducing the next vertex's x modulo its y, and the translation
/// class is pinned by adding (B*v0 mod k). The normal form is the
/// lexicographically smallest of the 2n representative coordinate sequences.
template <class I>
std::vector<std::array<I, 2>> integral_normal_form(const std::vector<std::array<I, 2>>& ccw,
                                                   const I& kmod) {
    const std::size_t n = ccw.size();
    std::vector<std::array<I, 2>> best;
    std::vector<std::array<I, 2>> rep(n);

    for (std::size_t start = 0; start < n; ++start) {
        for (int orient = 0; orient < 2; ++orient) {
            auto vertex = [&](std::size_t idx) -> const std::array<I, 2>& {
                return orient == 0 ? ccw[(start + idx) % n] : ccw[(start + n - idx) % n];
            };
            const std::array<I, 2>& v0 = vertex(0);
            const std::array<I, 2>& v1 = vertex(1);
            const I ex = v1[0] - v0[0];
            const I ey = v1[1] - v0[1];
            const I g = int_gcd(ex, ey);
            const I px = ex / g, py = ey / g;

            // (a, b) with a*px + b*py = 1
            I old_r = px, r = py, old_s = I(1), s = I(0), old_t = I(0), t = I(1);
            while (r != 0) {
                const I q = old_r / r;
                I tmp = old_r - q * r; old_r = r; r = tmp;
                tmp = old_s - q * s; old_s = s; s = tmp;
                tmp = old_t - q * t; old_t = t; t = tmp;
            }
            I a = old_s, b = old_t;
            if (old_r < 0) { a = -a; b = -b; }
            // second row: det +1 for forward traversal, det -1 for reversed
            const I c = orient == 0 ? -py : py;
            const I d = orient == 0 ? px : -px;

            // shear pin: x-coordinate of the second vertex reduced mod its y
            const std::array<I, 2>& v2 = vertex(2);
            const I u2x = v2[0] - v0[0], u2y = v2[1] - v0[1];
            const I x2 = a * u2x + b * u2y;
            const I y2 = c * u2x + d * u2y;
            const I sh = -floor_div(x2, y2);
            const I ba = a + sh * c, bb = b + sh * d;

            // translation pinned inside [0,k)^2
            const I dx = pos_mod(I(ba * v0[0] + bb * v0[1]), kmod);
            const I dy = pos_mod(I(c * v0[0] + d * v0[1]), kmod);

            bool better = best.empty();
            bool decided = better;
            for (std::size_t j = 0; j < n; ++j) {
                const std::array<I, 2>& v = vertex(j);
                const I ux = v[0] - v0[0], uy = v[1] - v0[1];
                rep[j] = {ba * ux + bb * uy + dx, c * ux + d * uy + dy};
                if (!decided) {
                    if (rep[j][0] != best[j][0]) {
                        better = rep[j][0] < best[j][0];
                        decided = true;
                    } else if (rep[j][1] != best[j][1]) {
                        better = rep[j][1] < best[j][1];
                        decided = true;
                    }
                }
            }
            if (better) best = rep;
        }
    }
    return best;
}

} // namespace detail

/// A distinguished representative of the affine unimodular equivalence class
/// of P. Idempotent; equivalent inputs yield structurally equal outputs.
inline Polygon canonical_form(const Polygon& poly) {
    const BigInt k = polygon_denominator(poly);
    std::vector<std::array<BigInt, 2>> scaled(poly.size());
    for (std::size_t j = 0; j < poly.size(); ++j) {
        const Point& p = poly[j];
        scaled[j] = {num(p.x) * (k / den(p.x)), num(p.y) * (k / den(p.y))};
    }
    const auto rep = detail::integral_normal_form(scaled, k);
    std::vector<Point> verts;
    verts.reserve(rep.size());
    for (const auto& v : rep) verts.push_back(Point{Rat(v[0], k), Rat(v[1], k)});
    return Polygon(std::move(verts));
}

/// True iff P = U Q + z for some integer U with det +-1 and integral z.
inline bool equivalent(const Polygon& lhs, const Polygon& rhs) {
    if (lhs.size() != rhs.size()) return false;
    if (polygon_denominator(lhs) != polygon_denominator(rhs)) return false;
    if (polygon_area(lhs) != polygon_area(rhs)) return false;
    return canonical_form(lhs) == canonical_form(rhs);
}

} // namespace latpoly
