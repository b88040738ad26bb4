#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latpath/errors.hpp"

namespace latpath {

// A point (or vector) of the integer lattice Z^2. Everything in the core is
// exact integer arithmetic; there is no floating point anywhere.
struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) {
        return {a.x - b.x, a.y - b.y};
    }
    constexpr bool operator==(const LatticePoint&) const = default;
    // Lexicographic (x, then y); the deterministic order used when no
    // direction order is in scope.
    constexpr auto operator<=>(const LatticePoint&) const = default;
};

constexpr std::int64_t cross(LatticePoint a, LatticePoint b) {
    return a.x * b.y - a.y * b.x;
}

constexpr std::int64_t dot(LatticePoint a, LatticePoint b) {
    return a.x * b.x + a.y * b.y;
}

std::string to_string(LatticePoint p);

// Exact stand-in for an "irrational" linear form. Points are ranked by the
// pair (primary . p, tiebreak . p) compared lexicographically; requiring
// det(primary, tiebreak) != 0 makes the key injective on Z^2, which is the
// property the classical construction gets from irrationality. The usual
// choice x - eps*y is primary=(1,0), tiebreak=(0,-1).
class DirectionOrder {
public:
    DirectionOrder(LatticePoint primary, LatticePoint tiebreak);

    // Text form "a1,a2;t1,t2", e.g. "1,0;0,-1".
    static DirectionOrder parse(std::string_view text);
    std::string str() const;

    LatticePoint primary() const { return primary_; }
    LatticePoint tiebreak() const { return tiebreak_; }

    std::pair<std::int64_t, std::int64_t> key(LatticePoint p) const {
        return {dot(primary_, p), dot(tiebreak_, p)};
    }
    std::strong_ordering compare(LatticePoint u, LatticePoint v) const {
        return key(u) <=> key(v);
    }
    bool less(LatticePoint u, LatticePoint v) const {
        return compare(u, v) == std::strong_ordering::less;
    }

    bool operator==(const DirectionOrder&) const = default;

private:
    LatticePoint primary_;
    LatticePoint tiebreak_;
};

// Spec-level comparison entry point: equal only when u == v.
std::strong_ordering lambda_compare(const DirectionOrder& order,
                                    LatticePoint u, LatticePoint v);

// Convex polygon with integer vertices, stored counterclockwise and strictly
// convex (collinear input points are absorbed into edges). Derived lattice
// data is computed once at construction:
//   all_points       Delta cap Z^2, lexicographic order
//   interior_points  Int Delta cap Z^2
//   m = |all_points| - 1, l = |interior_points|, B = boundary point count.
class LatticePolygon {
public:
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::vector<LatticePoint>& all_points() const { return all_points_; }
    const std::vector<LatticePoint>& interior_points() const { return interior_points_; }

    std::int64_t doubled_area() const { return doubled_area_; }
    std::size_t m() const { return all_points_.size() - 1; }
    std::size_t l() const { return interior_points_.size(); }
    std::size_t boundary_count() const { return all_points_.size() - interior_points_.size(); }

    // Exact half-plane membership tests.
    bool contains(LatticePoint p) const;
    bool contains_interior(LatticePoint p) const;

    bool operator==(const LatticePolygon& other) const {
        return vertices_ == other.vertices_;
    }

private:
    LatticePolygon() = default;
    friend LatticePolygon make_polygon(std::vector<LatticePoint> input);

    std::vector<LatticePoint> vertices_;
    std::vector<LatticePoint> all_points_;
    std::vector<LatticePoint> interior_points_;
    std::int64_t doubled_area_ = 0;
};

// Validates and normalizes a vertex list (either orientation, redundant
// collinear points allowed) into a strictly convex counterclockwise polygon,
// rotated so the lexicographically smallest vertex comes first.
// Throws DegeneratePolygon or NonConvexInput.
LatticePolygon make_polygon(std::vector<LatticePoint> input);

// The vertices where the order reaches its minimum (p) and maximum (q) over
// the polygon. Both are always corners of the polygon.
std::pair<LatticePoint, LatticePoint> extreme_vertices(const LatticePolygon& polygon,
                                                       const DirectionOrder& order);

} // namespace latpath
