#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/width.hpp"

using namespace latpoly;
using namespace latpoly::testing;

TEST_CASE("directional width") {
    const Polygon square = poly({{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}});
    CHECK(width(square, Dir{0, 1}) == 1);
    CHECK(width(square, Dir{1, 1}) == 2);
    const Polygon wedge = poly({{"0", "1/2"}, {"0", "-1"}, {"6", "-1"}});
    CHECK(width(wedge, Dir{0, 1}) == parse_rat("3/2"));
    const Polygon threefold = poly({{"0", "0"}, {"3", "0"}, {"0", "3"}});
    CHECK(width(threefold, Dir{1, 1}) == 3);
    CHECK_THROWS_AS(width(square, Dir{0, 0}), DomainError);
}

TEST_CASE("lattice width of the named polygons") {
    const Polygon square = poly({{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}});
    auto [w1, d1] = lattice_width(square);
    CHECK(w1 == 1);
    CHECK(d1 == Dir{0, 1}); // tie against (1,0) breaks lexicographically

    const Polygon threefold = poly({{"0", "0"}, {"3", "0"}, {"0", "3"}});
    auto [w2, d2] = lattice_width(threefold);
    CHECK(w2 == 3);
    CHECK(d2 == Dir{0, 1});

    const Polygon wedge = poly({{"0", "1/2"}, {"0", "-1"}, {"6", "-1"}});
    auto [w3, d3] = lattice_width(wedge);
    CHECK(w3 == parse_rat("3/2"));
    CHECK(d3 == Dir{0, 1});
}

TEST_CASE("no sampled direction beats the winner") {
    std::mt19937_64 rng(47);
    for (int j = 0; j < 30; ++j) {
        const Polygon p = random_polygon(rng, 1 + j % 3, 5);
        const auto [lw, dir] = lattice_width(p);
        CHECK(width(p, dir) == lw);
        const auto winners = lattice_width_directions(p);
        CHECK(std::count(winners.begin(), winners.end(), dir) == 1);
        for (const Dir& w : winners) CHECK(width(p, w) == lw);
        // blunt sample outside the canonical half as well
        for (BigInt wx = -6; wx <= 6; ++wx)
            for (BigInt wy = -6; wy <= 6; ++wy) {
                if (wx == 0 && wy == 0) continue;
                CHECK(width(p, Dir{wx, wy}) >= lw);
            }
    }
}

TEST_CASE("lattice width is unimodular invariant") {
    std::mt19937_64 rng(53);
    for (int j = 0; j < 20; ++j) {
        const Polygon p = random_polygon(rng, 1 + j % 3, 4);
        const Rat lw = lattice_width(p).first;
        for (int t = 0; t < 10; ++t)
            CHECK(lattice_width(apply_map(p, random_unimodular(rng))).first == lw);
    }
}

TEST_CASE("strip placements position the polygon inside the strip") {
    const Polygon wedge = poly({{"0", "1/2"}, {"0", "-1"}, {"6", "-1"}});
    CHECK(realizable_in_strip(wedge, Rat(-1), parse_rat("1/2")));
    const auto placements = strip_placements(wedge, Rat(-1), parse_rat("1/2"));
    REQUIRE(!placements.empty());
    const auto st = lattice_stats(wedge);
    for (const auto& pl : placements) {
        const Polygon q = position_in_strip(wedge, pl);
        for (const Point& v : q.vertices()) {
            CHECK(v.y >= -1);
            CHECK(v.y <= parse_rat("1/2"));
        }
        const auto st2 = lattice_stats(q);
        CHECK(st2.interior == st.interior);
        CHECK(st2.boundary == st.boundary);
        CHECK(st2.area == st.area);
    }

    const Polygon threefold = poly({{"0", "0"}, {"3", "0"}, {"0", "3"}});
    CHECK(!realizable_in_strip(threefold, Rat(-1), Rat(1)));
}

TEST_CASE("a sheared needle is strip realizable") {
    // only a shear reveals that this long diagonal sliver fits in R x [0, 1]
    const Polygon needle = poly({{"0", "0"}, {"1", "0"}, {"10", "9"}, {"10", "10"}});
    CHECK(realizable_in_strip(needle, Rat(0), Rat(1)));
    CHECK(lattice_width(needle).first == 1);
}
