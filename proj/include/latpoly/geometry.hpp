#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "latpoly/rational.hpp"

namespace latpoly {

struct Point {
    Rat x;
    Rat y;

    friend bool operator==(const Point& a, const Point& b) = default;
};

/// Lexicographic by (x, y).
inline bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

inline Rat cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Strictly convex counterclockwise vertex cycle. The stored sequence always
/// starts at the lexicographically smallest vertex so that structural
/// equality of two Polygon values means geometric equality.
class Polygon {
  public:
    /// Accepts the vertices of a strictly convex polygon in CCW order (any
    /// rotation). Throws DomainError if the cycle is not strictly convex.
    explicit Polygon(std::vector<Point> ccw_vertices) : verts_(std::move(ccw_vertices)) {
        if (verts_.size() < 3) throw DomainError("polygon needs at least 3 vertices");
        const std::size_t n = verts_.size();
        for (std::size_t j = 0; j < n; ++j) {
            const Rat c = cross(verts_[j], verts_[(j + 1) % n], verts_[(j + 2) % n]);
            if (c <= 0) throw DomainError("vertex cycle not strictly convex CCW");
        }
        rotate_to_lex_min();
    }

    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Point& operator[](std::size_t j) const { return verts_[j]; }

    friend bool operator==(const Polygon& a, const Polygon& b) { return a.verts_ == b.verts_; }

  private:
    void rotate_to_lex_min() {
        auto it = verts_.begin();
        for (auto j = verts_.begin(); j != verts_.end(); ++j)
            if (lex_less(*j, *it)) it = j;
        std::rotate(verts_.begin(), it, verts_.end());
    }

    std::vector<Point> verts_;
};

/// Convex hulls of finite point sets degenerate to segments, points or
/// nothing; those outcomes are values here, not errors (integer hulls of
/// rational polygons routinely produce them).
struct Hull {
    struct Empty {
        friend bool operator==(const Empty&, const Empty&) { return true; }
    };
    using Segment = std::pair<Point, Point>; // endpoints, lex-ordered

    std::variant<Empty, Point, Segment, Polygon> value;

    bool empty() const { return std::holds_alternative<Empty>(value); }
    bool is_point() const { return std::holds_alternative<Point>(value); }
    bool is_segment() const { return std::holds_alternative<Segment>(value); }
    bool is_polygon() const { return std::holds_alternative<Polygon>(value); }
    const Polygon& polygon() const { return std::get<Polygon>(value); }
    const Segment& segment() const { return std::get<Segment>(value); }
    const Point& point() const { return std::get<Point>(value); }

    /// -1 empty, 0 point, 1 segment, 2 polygon.
    int dim() const { return static_cast<int>(value.index()) - 1; }

    friend bool operator==(const Hull& a, const Hull& b) { return a.value == b.value; }
};

/// Andrew's monotone chain over exact rationals.
inline Hull convex_hull(std::span<const Point> points) {
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (pts.empty()) return Hull{Hull::Empty{}};
    if (pts.size() == 1) return Hull{pts[0]};

    auto build = [&](auto begin, auto end) {
        std::vector<Point> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), *it) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Point> lower = build(pts.begin(), pts.end());
    std::vector<Point> upper = build(pts.rbegin(), pts.rend());

    if (lower.size() == 2 && upper.size() == 2)
        return Hull{Hull::Segment{pts.front(), pts.back()}};

    std::vector<Point> ccw(lower.begin(), lower.end() - 1);
    ccw.insert(ccw.end(), upper.begin(), upper.end() - 1);
    return Hull{Polygon(std::move(ccw))};
}

inline Hull convex_hull(const std::vector<Point>& points) {
    return convex_hull(std::span<const Point>(points));
}

/// Exact Euclidean area by the shoelace sum.
inline Rat polygon_area(const Polygon& poly) {
    const auto& v = poly.vertices();
    Rat twice = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const Point& a = v[j];
        const Point& b = v[(j + 1) % v.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / 2;
}

/// Least k >= 1 such that kP has integral vertices: the lcm of the reduced
/// coordinate denominators.
inline BigInt polygon_denominator(const Polygon& poly) {
    BigInt k = 1;
    for (const Point& p : poly.vertices()) {
        k = big_lcm(k, den(p.x));
        k = big_lcm(k, den(p.y));
    }
    return k;
}

/// 2k^2 * area(P). Integral whenever denominator(P) divides k; throws
/// NonIntegralNormalization otherwise.
inline BigInt normalized_area(const Polygon& poly, const BigInt& k) {
    if (k <= 0) throw DomainError("normalized_area: k must be positive");
    const Rat value = 2 * k * k * polygon_area(poly);
    if (!is_integer(value))
        throw NonIntegralNormalization("2k^2*area not integral for k=" + k.str());
    return num(value);
}

inline Point translate(const Point& p, const Rat& dx, const Rat& dy) {
    return Point{p.x + dx, p.y + dy};
}

inline Polygon translate(const Polygon& poly, const Rat& dx, const Rat& dy) {
    std::vector<Point> verts;
    verts.reserve(poly.size());
    for (const Point& p : poly.vertices()) verts.push_back(translate(p, dx, dy));
    return Polygon(std::move(verts));
}

/// Dilation t*P for t > 0.
inline Polygon scale(const Polygon& poly, const Rat& t) {
    if (t <= 0) throw DomainError("scale factor must be positive");
    std::vector<Point> verts;
    verts.reserve(poly.size());
    for (const Point& p : poly.vertices()) verts.push_back(Point{p.x * t, p.y * t});
    return Polygon(std::move(verts));
}

} // namespace latpoly
