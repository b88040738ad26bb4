#include "doctest.h"

#include <random>
#include <set>

#include "latpath/geometry.hpp"
#include "latpath/path.hpp"
#include "test_util.hpp"

using namespace latpath;
using testutil::triangle;
using testutil::x_minus_eps_y;

TEST_CASE("make_polygon derives m and l") {
    LatticePolygon d3 = triangle(3);
    CHECK(d3.m() == 9);
    CHECK(d3.l() == 1);
    CHECK(d3.interior_points() == std::vector<LatticePoint>{{1, 1}});

    LatticePolygon d1 = triangle(1);
    CHECK(d1.m() == 2);
    CHECK(d1.l() == 0);

    LatticePolygon square = testutil::rectangle(1, 1);
    CHECK(square.m() == 3);
    CHECK(square.l() == 0);
    CHECK(square.all_points().size() == 4);
}

TEST_CASE("make_polygon normalizes orientation and collinear points") {
    // clockwise input with a redundant midpoint on the bottom edge
    LatticePolygon poly = make_polygon({{0, 3}, {3, 0}, {1, 0}, {0, 0}});
    CHECK(poly == triangle(3));
    CHECK(poly.vertices().size() == 3);
}

TEST_CASE("make_polygon rejects degenerate and nonconvex input") {
    CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 0}, {2, 0}}), DegeneratePolygon);
    CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 0}}), DegeneratePolygon);
    CHECK_THROWS_AS(make_polygon({{0, 0}}), DegeneratePolygon);
    CHECK_THROWS_AS(make_polygon({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}}), NonConvexInput);
    // bowtie
    CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), NonConvexInput);
    // pentagram: every turn is a left turn but the cycle winds twice
    CHECK_THROWS_AS(make_polygon({{0, 0}, {8, 5}, {-2, 4}, {6, 0}, {3, 9}}), NonConvexInput);
}

TEST_CASE("lattice point counts match a brute scan") {
    CHECK(triangle(2).all_points().size() == 6);
    CHECK(triangle(3).all_points().size() == 10);
    CHECK(testutil::rectangle(2, 2).interior_points() == std::vector<LatticePoint>{{1, 1}});
    CHECK(triangle(2).interior_points().empty());
}

TEST_CASE("Pick identity holds for random convex polygons") {
    std::mt19937_64 rng(20240917);
    for (int trial = 0; trial < 60; ++trial) {
        LatticePolygon poly = make_polygon(testutil::random_convex_vertices(rng));
        std::int64_t interior = static_cast<std::int64_t>(poly.l());
        std::int64_t boundary = static_cast<std::int64_t>(poly.boundary_count());
        CHECK(poly.doubled_area() == 2 * interior + boundary - 2);
    }
}

TEST_CASE("direction order comparison") {
    DirectionOrder order = x_minus_eps_y();
    CHECK(order.less({0, 3}, {0, 0})); // keys (0,-3) < (0,0)
    CHECK(lambda_compare(order, {1, 5}, {1, 5}) == std::strong_ordering::equal);

    DirectionOrder negated({-1, 0}, {0, 1});
    CHECK(negated.less({0, 0}, {0, 3}));

    CHECK_THROWS_AS(DirectionOrder({1, 2}, {2, 4}), InvalidDirection);
    CHECK(DirectionOrder::parse("1,0;0,-1") == order);
    CHECK(order.str() == "1,0;0,-1");
    CHECK_THROWS_AS(DirectionOrder::parse("1,0;0"), InvalidDirection);
}

TEST_CASE("negating both vectors reverses every strict comparison") {
    DirectionOrder order({2, -3}, {1, 1});
    DirectionOrder negated({-2, 3}, {-1, -1});
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> coord(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        LatticePoint u{coord(rng), coord(rng)};
        LatticePoint v{coord(rng), coord(rng)};
        if (u == v) continue;
        CHECK(order.less(u, v) == negated.less(v, u));
    }
}

TEST_CASE("direction order is a strict total order on point sets") {
    DirectionOrder order({2, -3}, {1, 1});
    std::vector<LatticePoint> pts;
    for (std::int64_t x = -3; x <= 3; ++x) {
        for (std::int64_t y = -3; y <= 3; ++y) pts.push_back({x, y});
    }
    std::sort(pts.begin(), pts.end(),
              [&](LatticePoint a, LatticePoint b) { return order.less(a, b); });
    for (std::size_t i = 1; i < pts.size(); ++i) {
        CHECK(order.less(pts[i - 1], pts[i]));
    }
}

TEST_CASE("extreme vertices") {
    LatticePolygon d3 = triangle(3);
    auto [p, q] = extreme_vertices(d3, x_minus_eps_y());
    CHECK(p == LatticePoint{0, 3});
    CHECK(q == LatticePoint{3, 0});

    auto [p2, q2] = extreme_vertices(d3, DirectionOrder({1, 0}, {0, 1}));
    CHECK(p2 == LatticePoint{0, 0});
    CHECK(q2 == LatticePoint{3, 0});

    auto [p3, q3] = extreme_vertices(testutil::rectangle(1, 1), x_minus_eps_y());
    CHECK(p3 == LatticePoint{0, 1});
    CHECK(q3 == LatticePoint{1, 0});

    // extremes agree with a full scan over all lattice points
    DirectionOrder skew({3, 2}, {-1, 1});
    auto [pv, qv] = extreme_vertices(d3, skew);
    for (LatticePoint pt : d3.all_points()) {
        CHECK(!skew.less(pt, pv));
        CHECK(!skew.less(qv, pt));
    }
}

TEST_CASE("boundary chains of the degree-3 triangle") {
    LatticePolygon d3 = triangle(3);
    BoundaryChains chains = boundary_chains(d3, x_minus_eps_y());
    CHECK(chains.alpha_plus.points ==
          std::vector<LatticePoint>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
    CHECK(chains.n_plus() == 3);
    CHECK(chains.alpha_minus.points ==
          std::vector<LatticePoint>{{0, 3}, {0, 2}, {0, 1}, {0, 0}, {1, 0}, {2, 0}, {3, 0}});
    CHECK(chains.n_minus() == 6);

    BoundaryChains d2 = boundary_chains(triangle(2), x_minus_eps_y());
    CHECK(d2.n_plus() == 2);
    CHECK(d2.n_minus() == 4);
}

TEST_CASE("chains cover the boundary exactly once") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        LatticePolygon poly = make_polygon(testutil::random_convex_vertices(rng));
        DirectionOrder order = trial % 2 == 0 ? x_minus_eps_y() : DirectionOrder({2, 1}, {1, -1});
        BoundaryChains chains = boundary_chains(poly, order);
        CHECK(chains.n_plus() + chains.n_minus() == poly.boundary_count());
        CHECK(is_lambda_increasing(chains.alpha_plus, order));
        CHECK(is_lambda_increasing(chains.alpha_minus, order));

        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        for (LatticePoint p : chains.alpha_plus.points) seen.insert({p.x, p.y});
        // every interior point of alpha- is new; endpoints are shared
        for (std::size_t i = 1; i + 1 < chains.alpha_minus.points.size(); ++i) {
            LatticePoint p = chains.alpha_minus.points[i];
            CHECK(!seen.contains({p.x, p.y}));
            seen.insert({p.x, p.y});
        }
        CHECK(seen.size() == poly.boundary_count());
    }
}

TEST_CASE("tiebreak changes keep the defining extremal property") {
    LatticePolygon d3 = triangle(3);
    for (auto tiebreak : std::vector<LatticePoint>{{0, -1}, {0, 1}, {1, 1}, {-1, 2}}) {
        DirectionOrder order({1, 0}, tiebreak);
        auto [p, q] = extreme_vertices(d3, order);
        for (LatticePoint pt : d3.all_points()) {
            CHECK(!order.less(pt, p));
            CHECK(!order.less(q, pt));
        }
    }
}

TEST_CASE("unimodular equivariance of extremes and chains") {
    std::mt19937_64 rng(991);
    LatticePolygon d3 = triangle(3);
    DirectionOrder order = x_minus_eps_y();
    for (int trial = 0; trial < 20; ++trial) {
        // orientation preserving, so the clockwise chain maps to the
        // clockwise chain
        testutil::Unimodular u = testutil::random_unimodular(rng, /*allow_reflection=*/false);
        REQUIRE(u.det() == 1);
        LatticePolygon image = u.apply(d3);
        DirectionOrder pushed = u.push(order);

        auto [p, q] = extreme_vertices(d3, order);
        auto [pi, qi] = extreme_vertices(image, pushed);
        CHECK(pi == u.apply(p));
        CHECK(qi == u.apply(q));

        BoundaryChains chains = boundary_chains(d3, order);
        BoundaryChains imaged = boundary_chains(image, pushed);
        CHECK(imaged.alpha_plus == u.apply(chains.alpha_plus));
        CHECK(imaged.alpha_minus == u.apply(chains.alpha_minus));
    }
}
