#include "doctest.h"

#include <algorithm>
#include <set>

#include "latpath/path.hpp"
#include "test_util.hpp"

using namespace latpath;
using testutil::triangle;
using testutil::x_minus_eps_y;

namespace {

// The increasing path in the degree-3 triangle that skips only the origin;
// its two pivots are worked through in the multiplicity tests as well.
LatticePath skip_origin_path() {
    return LatticePath({{0, 3}, {0, 2}, {0, 1}, {1, 2}, {1, 1}, {1, 0}, {2, 1}, {2, 0}, {3, 0}});
}

} // namespace

TEST_CASE("is_lambda_increasing") {
    DirectionOrder order = x_minus_eps_y();
    LatticePolygon d3 = triangle(3);
    BoundaryChains chains = boundary_chains(d3, order);
    CHECK(is_lambda_increasing(chains.alpha_plus, order));
    CHECK(is_lambda_increasing(chains.alpha_minus, order));

    LatticePath reversed = chains.alpha_plus;
    std::reverse(reversed.points.begin(), reversed.points.end());
    CHECK(!is_lambda_increasing(reversed, order));

    LatticePath repeated({{0, 3}, {0, 2}, {0, 2}, {0, 0}});
    CHECK(!is_lambda_increasing(repeated, order));
}

TEST_CASE("enumeration counts are binomial") {
    DirectionOrder order = x_minus_eps_y();
    PathEnumeration d2(triangle(2), order, 4);
    CHECK(d2.size() == 4); // choose 3 of the 4 middle points

    PathEnumeration d4(triangle(4), order, 12);
    CHECK(d4.size() == 78); // C(13, 11)

    for (std::size_t n = 1; n <= 9; ++n) {
        PathEnumeration paths(triangle(3), order, n);
        CHECK(paths.size() == testutil::binomial_small(8, n - 1));
    }

    CHECK_THROWS_AS(PathEnumeration(triangle(2), order, 0), InvalidLength);
    CHECK_THROWS_AS(PathEnumeration(triangle(2), order, 6), InvalidLength);
}

TEST_CASE("full-length enumeration is the single sorted path") {
    for (auto& poly : {triangle(2), triangle(3), testutil::rectangle(2, 3)}) {
        DirectionOrder order = x_minus_eps_y();
        PathEnumeration paths(poly, order, poly.m());
        REQUIRE(paths.size() == 1);
        LatticePath only = paths.at(0);
        CHECK(only.points.size() == poly.m() + 1);
        CHECK(is_lambda_increasing(only, order));
    }
}

TEST_CASE("enumeration agrees with the generate-and-filter oracle") {
    for (auto& poly : {triangle(2), triangle(3)}) {
        for (auto& order : {x_minus_eps_y(), DirectionOrder({0, -1}, {1, 0})}) {
            for (std::size_t n = 1; n <= poly.m(); ++n) {
                PathEnumeration paths(poly, order, n);
                std::vector<LatticePath> got;
                auto subset = paths.subset_at(0);
                for (std::uint64_t rank = 0; rank < paths.size(); ++rank) {
                    got.push_back(paths.make_path(subset));
                    paths.next_subset(subset);
                }
                for (const LatticePath& path : got) {
                    CHECK(is_lambda_increasing(path, order));
                }
                // no duplicates
                std::set<std::string> keys;
                for (const LatticePath& path : got) keys.insert(to_string(path));
                CHECK(keys.size() == got.size());

                std::vector<LatticePath> expected = testutil::oracle_paths(poly, order, n);
                std::set<std::string> expected_keys;
                for (const LatticePath& path : expected) expected_keys.insert(to_string(path));
                CHECK(keys == expected_keys);
            }
        }
    }
}

TEST_CASE("subset_at matches sequential iteration") {
    PathEnumeration paths(triangle(3), x_minus_eps_y(), 6);
    auto subset = paths.subset_at(0);
    for (std::uint64_t rank = 0; rank < paths.size(); ++rank) {
        CHECK(paths.subset_at(rank) == subset);
        paths.next_subset(subset);
    }
}

TEST_CASE("pivots of the worked example path") {
    LatticePath gamma = skip_origin_path();

    auto plus = find_pivot(gamma, Side::plus);
    REQUIRE(plus.has_value());
    CHECK(plus->k == 2);
    CHECK(plus->apex == LatticePoint{0, 1});
    CHECK(plus->doubled_area == 1);
    CHECK(plus->reflected == LatticePoint{1, 3});

    auto minus = find_pivot(gamma, Side::minus);
    REQUIRE(minus.has_value());
    CHECK(minus->k == 3);
    CHECK(minus->apex == LatticePoint{1, 2});
    CHECK(minus->reflected == LatticePoint{0, 0});

    LatticePath straight({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    CHECK(!find_pivot(straight, Side::plus).has_value());
    CHECK(!find_pivot(straight, Side::minus).has_value());
}

TEST_CASE("surgery of the worked example path") {
    LatticePolygon d3 = triangle(3);
    LatticePath gamma = skip_origin_path();

    auto plus = find_pivot(gamma, Side::plus);
    SurgeryResult s_plus = apply_surgery(gamma, *plus, d3);
    CHECK(!s_plus.reflected_inside); // (1,3) leaves the triangle
    CHECK(s_plus.dropped.points.size() == gamma.points.size() - 1);

    auto minus = find_pivot(gamma, Side::minus);
    SurgeryResult s_minus = apply_surgery(gamma, *minus, d3);
    CHECK(s_minus.reflected_inside); // (0,0)
    CHECK(s_minus.reflected.points[3] == LatticePoint{0, 0});

    DirectionOrder order = x_minus_eps_y();
    CHECK(is_lambda_increasing(s_minus.dropped, order));
    CHECK(is_lambda_increasing(s_minus.reflected, order));
    // the reflected vertex stays strictly between its neighbours
    CHECK(order.less(minus->before, minus->reflected));
    CHECK(order.less(minus->reflected, minus->after));
}

TEST_CASE("triangle_double_area") {
    CHECK(triangle_double_area({0, 1}, {0, 0}, {1, 0}) == 1);
    CHECK(triangle_double_area({0, 0}, {1, 1}, {2, 0}) == 2);
    CHECK(triangle_double_area({0, 0}, {2, 2}, {4, 4}) == 0);
}

TEST_CASE("surgery shrinks the enclosed region") {
    LatticePolygon d3 = triangle(3);
    DirectionOrder order = x_minus_eps_y();
    BoundaryChains chains = boundary_chains(d3, order);
    PathEnumeration paths(d3, order, 7);
    auto subset = paths.subset_at(0);
    for (std::uint64_t rank = 0; rank < paths.size(); ++rank) {
        LatticePath gamma = paths.make_path(subset);
        paths.next_subset(subset);
        for (Side side : {Side::plus, Side::minus}) {
            auto pivot = find_pivot(gamma, side);
            if (!pivot) continue;
            const LatticePath& alpha =
                side == Side::plus ? chains.alpha_plus : chains.alpha_minus;
            SurgeryResult surgery = apply_surgery(gamma, *pivot, d3);
            std::int64_t before = doubled_region_area(gamma, alpha);
            CHECK(doubled_region_area(surgery.dropped, alpha) == before - pivot->doubled_area);
            if (surgery.reflected_inside) {
                CHECK(doubled_region_area(surgery.reflected, alpha) ==
                      before - 2 * pivot->doubled_area);
            }
        }
    }
}

TEST_CASE("chains enclose zero area with themselves") {
    LatticePolygon d3 = triangle(3);
    BoundaryChains chains = boundary_chains(d3, x_minus_eps_y());
    CHECK(doubled_region_area(chains.alpha_plus, chains.alpha_plus) == 0);
    CHECK(doubled_region_area(chains.alpha_minus, chains.alpha_plus) == d3.doubled_area());
}
