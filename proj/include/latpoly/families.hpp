#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latpoly/canonical.hpp"
#include "latpoly/geometry.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

// ---------------------------------------------------------------------------
// Closed-form bounds.

/// Sharp boundary-point bound (k+1)(i+1)+3 for denominator k >= 2.
inline BigInt b_max(const BigInt& k, const BigInt& i) {
    if (k < 2) throw DomainError("b_max needs k >= 2; use scott_classical_bound for k = 1");
    if (i < 1) throw DomainError("b_max needs i >= 1");
    return (k + 1) * (i + 1) + 3;
}

/// Scott's bound for lattice polygons: 9 for i = 1, 2i+6 for i >= 2.
inline BigInt scott_classical_bound(const BigInt& i) {
    if (i < 1) throw DomainError("scott_classical_bound needs i >= 1");
    return i == 1 ? BigInt(9) : 2 * i + 6;
}

/// Sharp lower area bound for denominator k >= 2, i >= 1 interior points.
/// two_dimensional selects the regime by the dimension of the integer hull.
inline Rat min_area(const BigInt& k, const BigInt& i, const BigInt& b, bool two_dimensional) {
    if (k < 2 || i < 1) throw DomainError("min_area needs k >= 2, i >= 1");
    if (two_dimensional) {
        if (b < 2 || b > b_max(k, i)) throw DomainError("min_area (dim 2) needs 2 <= b <= b_max");
        return Rat(i * (k + 1) + 1, 2 * k) + Rat(b, 2) - 1;
    }
    if (b < 0 || b > 2) throw DomainError("min_area (collinear) needs 0 <= b <= 2");
    if (b == 0) return Rat(i, k) - Rat(1, k) + Rat(3, 2 * k * k);
    if (b == 1) return Rat(i, k) + Rat(1, 2 * k * k);
    return Rat(i, k) + Rat(1, k);
}

/// The normalized upper-bound expression k(k+1)^2(i+1) - case(b), valid as a
/// formula for any k >= 1 (algebraic identities at k = 1, 2 are tested
/// against Pick and the half-integral table).
inline Rat max_area_formula_normalized(const BigInt& k, const BigInt& i, const BigInt& b) {
    if (k < 1 || i < 1) throw DomainError("max_area formula needs k >= 1, i >= 1");
    const BigInt bm = (k + 1) * (i + 1) + 3;
    if (b < 0 || b > bm) throw DomainError("max_area formula needs 0 <= b <= b_max");
    const BigInt bt = bm - b;
    BigInt sub;
    if (b == bm || b == bm - 1)
        sub = bt;
    else if (b >= 1)
        sub = 2 + k * (bt - 2);
    else
        sub = 3 + k * (bt - 2);
    return Rat(k * (k + 1) * (k + 1) * (i + 1) - sub);
}

/// Remark 2.5: the strip argument proves the bound for k >= 4; k = 3 is
/// exposed but conjectural (verified in the paper only through external
/// classification data), and k = 2 must go through half_integral_max_area.
inline bool upper_bound_conjectural(const BigInt& k) { return k == 3; }

/// Sharp upper area bound (as exact area) for denominator k >= 3.
inline Rat max_area(const BigInt& k, const BigInt& i, const BigInt& b) {
    if (k < 3)
        throw DomainError("max_area needs k >= 3 (use half_integral_max_area for k = 2)");
    return max_area_formula_normalized(k, i, b) / Rat(2 * k * k);
}

/// Sharp upper area bound for denominator-2 polygons.
inline Rat half_integral_max_area(const BigInt& i, const BigInt& b) {
    if (i < 1) throw DomainError("half_integral_max_area needs i >= 1");
    if (i == 1) {
        if (b < 0 || b > 9) throw DomainError("half_integral_max_area: i = 1 needs 0 <= b <= 9");
        BigInt eighths = 21;
        if (b == 7) eighths = 20;
        if (b == 8) eighths = 19;
        if (b == 9) eighths = 18;
        return Rat(b, 4) + Rat(eighths, 8);
    }
    if (b < 0 || b > 3 * i + 6)
        throw DomainError("half_integral_max_area needs 0 <= b <= 3i+6");
    BigInt eighths = 8;
    if (b == 3 * i + 5) eighths = 7;
    if (b == 3 * i + 6) eighths = 6;
    return Rat(3 * i, 2) + Rat(b, 4) + Rat(eighths, 8);
}

/// Confinement bounds used to justify enumeration boxes, on the normalized
/// area scale. Without h: a polygon not realizable in R x [-1,1] has
/// Area_k <= max(k^2(4i+5), k(k+2)^2(i+1)/2). With h in [2,k]: a polygon in
/// R x [-1,h/k] but no smaller strip has Area_k <= k(k^2/h + 2k + h)(i+1).
/// Values are floored (Area_k is an integer, so comparisons are unaffected).
inline BigInt strip_bound_formulas(const BigInt& k, const BigInt& i,
                                   std::optional<BigInt> h = std::nullopt) {
    if (k < 2 || i < 1) throw DomainError("strip_bound_formulas needs k >= 2, i >= 1");
    if (!h) {
        const BigInt first = k * k * (4 * i + 5);
        const BigInt second = rat_floor(Rat(k * (k + 2) * (k + 2) * (i + 1), 2));
        return first > second ? first : second;
    }
    if (*h < 2 || *h > k) throw DomainError("strip_bound_formulas needs 2 <= h <= k");
    return rat_floor((Rat(k * k, *h) + 2 * k + *h) * Rat(k * (i + 1)));
}

// ---------------------------------------------------------------------------
// Families.

enum class TheoremTag { ScottMax, AreaMin2D, AreaMinCollinear, AreaMax, HalfIntegralN2, Lemma31 };

inline const char* theorem_tag_name(TheoremTag t) {
    switch (t) {
        case TheoremTag::ScottMax: return "scott";
        case TheoremTag::AreaMin2D: return "min";
        case TheoremTag::AreaMinCollinear: return "min-collinear";
        case TheoremTag::AreaMax: return "max";
        case TheoremTag::HalfIntegralN2: return "half-n2";
        case TheoremTag::Lemma31: return "lemma31";
    }
    return "?";
}

/// Identifies one member of an extremal family, e.g. "min/2a?k=3&i=1&b=3&x=0".
struct FamilyId {
    TheoremTag theorem;
    std::string label; // "0a".."2c"
    BigInt k, i, b;
    std::optional<BigInt> x; // family offset where applicable

    std::string serialize() const {
        std::string s = theorem_tag_name(theorem);
        s += '/';
        s += label;
        s += "?k=" + k.str() + "&i=" + i.str() + "&b=" + b.str();
        if (x) s += "&x=" + x->str();
        return s;
    }

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// b_max and its deficit for one parameter point.
struct BoundCase {
    BigInt k, i, b;
    BigInt bmax;
    BigInt b_tilde;

    BoundCase(BigInt k_, BigInt i_, BigInt b_) : k(std::move(k_)), i(std::move(i_)), b(std::move(b_)) {
        bmax = b_max(k, i);
        b_tilde = bmax - b;
        if (b < 0 || b > bmax) throw DomainError("b outside [0, b_max]");
    }
};

struct FamilyMember {
    FamilyId id;
    Polygon polygon;
    /// Remark 2.2: (1a) at b = 2 minimizes only among two-dimensional integer
    /// hulls except at (k,i) = (2,1); everything else is a global extremum.
    bool global_minimum = true;
};

namespace detail {

inline Polygon hull_polygon(std::vector<Point> pts) {
    Hull h = convex_hull(pts);
    if (!h.is_polygon()) throw DomainError("degenerate family polygon");
    return h.polygon();
}

/// Every constructor output is re-counted before being returned.
inline void postverify(const Polygon& p, const BigInt& k, const BigInt& i, const BigInt& b,
                       std::optional<bool> two_dimensional = std::nullopt,
                       std::optional<Rat> area = std::nullopt) {
    const LatticeStats st = lattice_stats(p);
    const bool ok = st.interior == i && st.boundary == b && st.k == k &&
                    (!two_dimensional || (*two_dimensional ? st.hull_dim == 2 : st.hull_dim < 2)) &&
                    (!area || st.area == *area);
    if (!ok) throw std::logic_error("family constructor failed post-verification");
}

} // namespace detail

/// The unique Scott-equality triangle conv((0,1/k), (0,-1), ((k+1)(i+1),-1)).
inline Polygon scott_maximizer(const BigInt& k, const BigInt& i) {
    const BigInt bm = b_max(k, i); // validates k, i
    Polygon p = detail::hull_polygon(
        {Point{Rat(0), Rat(1, k)}, Point{Rat(0), Rat(-1)}, Point{Rat((k + 1) * (i + 1)), Rat(-1)}});
    detail::postverify(p, k, i, bm);
    return p;
}

/// All area minimizers at (k, i, b) in the requested integer-hull regime,
/// post-verified and pairwise non-equivalent.
inline std::vector<FamilyMember> area_minimizers(const BigInt& k, const BigInt& i,
                                                 const BigInt& b, bool two_dimensional) {
    const Rat bound = min_area(k, i, b, two_dimensional); // validates parameters
    const BigInt bm = b_max(k, i);
    std::vector<FamilyMember> out;
    const Rat inv_k(1, k);

    auto add = [&](const char* label, std::vector<Point> pts, std::optional<BigInt> x,
                   bool global = true) {
        Polygon p = detail::hull_polygon(std::move(pts));
        detail::postverify(p, k, i, b, two_dimensional, bound);
        out.push_back(FamilyMember{
            FamilyId{two_dimensional ? TheoremTag::AreaMin2D : TheoremTag::AreaMinCollinear,
                     label, k, i, b, std::move(x)},
            std::move(p), global});
    };

    if (two_dimensional) {
        if (b == bm - 2 * (k + 1))
            add("0a", {Point{Rat(0), Rat(-1)}, Point{Rat(i * (k + 1) - k + 1), Rat(-1)},
                       Point{-inv_k, inv_k}},
                std::nullopt);
        if (b >= 2 && b <= bm - (k + 1)) {
            const bool global = b != 2 || (k == 2 && i == 1);
            add("1a", {Point{Rat(0), Rat(-1)}, Point{Rat(b - 2), Rat(-1)}, Point{Rat(i), Rat(0)},
                       Point{-inv_k, inv_k}},
                std::nullopt, global);
        }
        if (i == 3 && b == 3)
            add("1b", {Point{Rat(0), Rat(-2)}, Point{Rat(2), Rat(0)}, Point{-inv_k, inv_k}},
                std::nullopt);
        if (b >= 3) {
            for (BigInt x = 0; x <= (bm - b) / 2; ++x)
                add("2a", {Point{Rat(0), Rat(0)}, Point{Rat(0), Rat(-1)}, Point{Rat(b - 3), Rat(-1)},
                           Point{Rat(i + 1), Rat(0)}, Point{Rat(x, k), inv_k}},
                    x);
        }
        if (i == 1 && b == 5) {
            for (BigInt x = 0; x <= k; ++x)
                add("2b", {Point{Rat(0), Rat(0)}, Point{Rat(0), Rat(-2)}, Point{Rat(2), Rat(0)},
                           Point{Rat(x, k), inv_k}},
                    x);
        }
    } else {
        if (b == 0)
            add("0c", {Point{Rat(1), inv_k}, Point{Rat(1) - inv_k, -inv_k}, Point{Rat(i) + inv_k, Rat(0)}},
                std::nullopt);
        if (b == 1)
            add("1c", {Point{Rat(1), inv_k}, Point{Rat(1) - inv_k, -inv_k}, Point{Rat(i + 1), Rat(0)}},
                std::nullopt);
        if (b == 2) {
            for (BigInt x = 0; x <= k * (i + 1); ++x)
                add("2c", {Point{Rat(0), Rat(0)}, Point{Rat(0), inv_k}, Point{Rat(x, k), -inv_k},
                           Point{Rat(i + 1), Rat(0)}},
                    x);
        }
    }
    return out;
}

/// All area maximizers at (k, i, b) for k >= 4 (k = 3 conjectural, see
/// upper_bound_conjectural), post-verified and pairwise non-equivalent.
inline std::vector<FamilyMember> area_maximizers(const BigInt& k, const BigInt& i,
                                                 const BigInt& b) {
    if (k < 3) throw DomainError("area_maximizers needs k >= 3");
    const Rat bound = max_area(k, i, b);
    const BoundCase bc(k, i, b);
    const BigInt bm = bc.bmax, bt = bc.b_tilde;
    std::vector<FamilyMember> out;
    const Rat inv_k(1, k);

    auto add = [&](const char* label, std::vector<Point> pts, std::optional<BigInt> x) {
        Polygon p = detail::hull_polygon(std::move(pts));
        detail::postverify(p, k, i, b, std::nullopt, bound);
        out.push_back(FamilyMember{
            FamilyId{TheoremTag::AreaMax, label, k, i, b, std::move(x)}, std::move(p), true});
    };

    if (b == bm - 4)
        add("0a", {Point{Rat(0), inv_k}, Point{inv_k, Rat(-1)},
                   Point{Rat((k + 1) * (i + 1)) - inv_k, Rat(-1)}},
            std::nullopt);
    if (b == 0)
        add("0b", {Point{Rat(0), inv_k}, Point{inv_k, Rat(-1)}, Point{Rat(1) - inv_k, Rat(-1)},
                   Point{Rat(k * (i + 1)) - inv_k, inv_k - 1}},
            std::nullopt);
    if (b >= 1 && b <= bm - 3)
        add("1a", {Point{Rat(0), inv_k}, Point{inv_k, Rat(-1)}, Point{Rat(b) - inv_k, Rat(-1)},
                   Point{Rat(k * (i + 1)), inv_k - 1}},
            std::nullopt);
    if (b >= 2 && b <= bm - 2) {
        for (BigInt x = 0; x <= bt / 2 - 1; ++x)
            add("2a", {Point{Rat(0), inv_k}, Point{Rat(0), inv_k - 1}, Point{Rat(x) + inv_k, Rat(-1)},
                       Point{Rat(x + b - 1) - inv_k, Rat(-1)}, Point{Rat(k * (i + 1)), inv_k - 1}},
                x);
    }
    if (b == bm - 1)
        add("2b", {Point{Rat(0), inv_k}, Point{Rat(0), inv_k - 1}, Point{inv_k, Rat(-1)},
                   Point{Rat((k + 1) * (i + 1)), Rat(-1)}},
            std::nullopt);
    if (b == bm)
        add("2c", {Point{Rat(0), inv_k}, Point{Rat(0), Rat(-1)}, Point{Rat((k + 1) * (i + 1)), Rat(-1)}},
            std::nullopt);
    return out;
}

// ---------------------------------------------------------------------------
// Lemma 3.1 equality conditions.

struct Lemma31Check {
    bool equality = false;        // Area_2(P) == 12i + 2b + 8
    BigInt area2;                 // Area_2(P)
    BigInt target;                // 12i + 2b + 8
    std::vector<std::string> failed_conditions;
};

/// For a denominator-2 polygon positioned by the caller in R x [-1,1]:
/// decides Area_2 = 12i+2b+8 and diagnoses the lemma's equality conditions
/// ((l_1,l_-1) = (b_1,b_-1), l_0 = i + 2/3 + b_0/6, and the middle band being
/// a trapezoid, i.e. no vertex on R x {0}).
inline Lemma31Check lemma31_equality_check(const Polygon& p) {
    if (polygon_denominator(p) != 2) throw DomainError("lemma31 check needs denominator 2");
    for (const Point& v : p.vertices())
        if (v.y < -1 || v.y > 1) throw DomainError("lemma31 check needs P inside R x [-1,1]");

    const LatticeStats st = lattice_stats(p);
    Lemma31Check res;
    res.area2 = st.area_k; // k = 2
    res.target = 12 * st.interior + 2 * st.boundary + 8;
    res.equality = res.area2 == res.target;

    const StripProfile prof = strip_profile(p, {Rat(-1), Rat(0), Rat(1)});
    auto row_b = [&](const BigInt& j) {
        auto it = prof.boundary_counts.find(j);
        return it == prof.boundary_counts.end() ? BigInt(0) : it->second;
    };
    if (prof.lengths.at(Rat(1)) != row_b(1)) res.failed_conditions.push_back("l_1 = b_1");
    if (prof.lengths.at(Rat(-1)) != row_b(-1)) res.failed_conditions.push_back("l_-1 = b_-1");
    if (prof.lengths.at(Rat(0)) != Rat(st.interior) + Rat(2, 3) + Rat(row_b(0), 6))
        res.failed_conditions.push_back("l_0 = i + 2/3 + b_0/6");
    for (const Point& v : p.vertices())
        if (v.y == 0) {
            res.failed_conditions.push_back("not a trapezoid");
            break;
        }
    return res;
}

// ---------------------------------------------------------------------------
// Remark 2.6: polygons attaining every area between the bounds.

namespace detail {

/// Vertex-edit closure of the remark's three moves. The remark quotes the
/// area deltas (l for the segment and top-vertex moves, k for the shoulder
/// move) on the maximizer's shape; as the polygon morphs toward the
/// minimizer the same moves act on different local structure, so the
/// generator is phrased as single-vertex (1/k)-grid edits: shift one vertex
/// by l/k along either axis, drop a vertex, or insert a vertex next to a
/// top-row one. Candidates that break the (i, b, k) statistics are
/// discarded by the caller.
inline std::vector<Polygon> remark26_moves(const Polygon& p, const BigInt& k) {
    std::vector<Polygon> cands;
    Rat ymax = p[0].y;
    for (const Point& v : p.vertices())
        if (v.y > ymax) ymax = v.y;
    auto try_add = [&](std::vector<Point> pts) {
        Hull h = convex_hull(pts);
        if (h.is_polygon()) cands.push_back(h.polygon());
    };

    const auto& vs = p.vertices();
    for (std::size_t j = 0; j < vs.size(); ++j) {
        for (BigInt l = 1; l < k; ++l) {
            for (int axis = 0; axis < 2; ++axis) {
                for (int sign : {1, -1}) {
                    std::vector<Point> pts(vs.begin(), vs.end());
                    (axis == 0 ? pts[j].x : pts[j].y) += Rat(BigInt(sign) * l, k);
                    try_add(std::move(pts));
                }
            }
        }
        // vertex removal (move (2) in reverse, and shape simplification)
        std::vector<Point> pts;
        for (std::size_t t = 0; t < vs.size(); ++t)
            if (t != j) pts.push_back(vs[t]);
        if (pts.size() >= 3) try_add(std::move(pts));
    }
    // move (2): insert a top-row vertex next to an existing one
    for (const Point& v : vs) {
        if (v.y != ymax) continue;
        for (BigInt l = 1; l < k; ++l) {
            for (int sign : {1, -1}) {
                std::vector<Point> pts(vs.begin(), vs.end());
                pts.push_back(Point{v.x + Rat(BigInt(sign) * l, k), v.y});
                try_add(std::move(pts));
            }
        }
    }
    return cands;
}

} // namespace detail

/// A polygon with denominator k, statistics (i, b) and normalized area
/// exactly N, reached from the (2a) maximizer by composing the moves of
/// Remark 2.6. Throws UnreachableArea when N lies outside the closed range.
inline Polygon intermediate_polygon(const BigInt& k, const BigInt& i, const BigInt& b,
                                    const BigInt& N) {
    if (b < 3) throw DomainError("intermediate_polygon needs b >= 3");
    const BigInt lo = num(2 * k * k * min_area(k, i, b, true));
    const BigInt hi = num(max_area_formula_normalized(k, i, b)); // validates k >= 3 via max_area
    if (k < 3) throw DomainError("intermediate_polygon needs k >= 3");
    if (N < lo || N > hi)
        throw UnreachableArea("N=" + N.str() + " outside [" + lo.str() + ", " + hi.str() + "]");

    // integer translations are equivalences; anchoring the bounding box near
    // the origin keeps the visited set from drifting sideways
    auto anchor = [](const Polygon& p) {
        Rat xmin = p[0].x, ymin = p[0].y;
        for (const Point& v : p.vertices()) {
            if (v.x < xmin) xmin = v.x;
            if (v.y < ymin) ymin = v.y;
        }
        return translate(p, Rat(-rat_floor(xmin)), Rat(-rat_floor(ymin)));
    };
    auto key = [](const Polygon& p) {
        std::string s;
        for (const Point& v : p.vertices()) s += rat_str(v.x) + "," + rat_str(v.y) + ";";
        return s;
    };

    // best-first toward the target area; each expansion applies one move
    auto distance = [&](const Polygon& p) {
        BigInt d = normalized_area(p, k) - N;
        return d < 0 ? -d : d;
    };
    std::multimap<BigInt, Polygon> frontier;
    std::set<std::string> seen;
    auto seed = [&](const Polygon& p) {
        Polygon anchored = anchor(p);
        if (seen.insert(key(anchored)).second)
            frontier.emplace(distance(anchored), std::move(anchored));
    };
    // both interpolation endpoints: the maximizers and, per the remark, the
    // minimizers conv(Q(P) + (0,1/k)) they degenerate to
    for (const FamilyMember& m : area_maximizers(k, i, b)) seed(m.polygon);
    for (const FamilyMember& m : area_minimizers(k, i, b, true)) seed(m.polygon);
    std::size_t budget = 200000;
    while (!frontier.empty()) {
        const Polygon p = std::move(frontier.begin()->second);
        frontier.erase(frontier.begin());
        if (normalized_area(p, k) == N) {
            detail::postverify(p, k, i, b);
            return p;
        }
        for (Polygon& q : detail::remark26_moves(p, k)) {
            if (budget-- == 0) throw ResourceLimit("intermediate_polygon move budget exceeded");
            // the whole construction lives in a strip of height 1 + 1/k and
            // horizontal extent (k+1)(i+1); a small pad keeps transitional
            // shapes without letting the search wander
            Rat xmin = q[0].x, xmax = q[0].x, ymin = q[0].y, ymax = q[0].y;
            for (const Point& v : q.vertices()) {
                if (v.x < xmin) xmin = v.x;
                if (v.x > xmax) xmax = v.x;
                if (v.y < ymin) ymin = v.y;
                if (v.y > ymax) ymax = v.y;
            }
            if (ymax - ymin > 1 + Rat(2, k)) continue;
            if (xmax - xmin > (k + 1) * (i + 1) + 2) continue;
            const LatticeStats st = lattice_stats(q);
            if (st.interior != i || st.boundary != b || st.k != k) continue;
            if (st.area_k < lo || st.area_k > hi) continue;
            Polygon anchored = anchor(q);
            if (seen.insert(key(anchored)).second)
                frontier.emplace(distance(anchored), std::move(anchored));
        }
    }
    throw UnreachableArea("no move sequence reaches normalized area " + N.str());
}

} // namespace latpoly
