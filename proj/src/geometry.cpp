#include "latpath/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <set>

namespace latpath {

std::string to_string(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

DirectionOrder::DirectionOrder(LatticePoint primary, LatticePoint tiebreak)
    : primary_(primary), tiebreak_(tiebreak) {
    if (cross(primary, tiebreak) == 0) {
        throw InvalidDirection("direction order needs det(primary, tiebreak) != 0, got " +
                               to_string(primary) + ";" + to_string(tiebreak));
    }
}

namespace {

std::int64_t parse_int(std::string_view text, std::size_t& pos) {
    std::int64_t value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) {
        throw InvalidDirection("bad direction order literal: '" + std::string(text) + "'");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
}

void expect_char(std::string_view text, std::size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c) {
        throw InvalidDirection("bad direction order literal: '" + std::string(text) +
                               "' (expected '" + std::string(1, c) + "')");
    }
    ++pos;
}

} // namespace

DirectionOrder DirectionOrder::parse(std::string_view text) {
    std::size_t pos = 0;
    LatticePoint a, t;
    a.x = parse_int(text, pos);
    expect_char(text, pos, ',');
    a.y = parse_int(text, pos);
    expect_char(text, pos, ';');
    t.x = parse_int(text, pos);
    expect_char(text, pos, ',');
    t.y = parse_int(text, pos);
    if (pos != text.size()) {
        throw InvalidDirection("trailing characters in direction order literal: '" +
                               std::string(text) + "'");
    }
    return DirectionOrder(a, t);
}

std::string DirectionOrder::str() const {
    return std::to_string(primary_.x) + "," + std::to_string(primary_.y) + ";" +
           std::to_string(tiebreak_.x) + "," + std::to_string(tiebreak_.y);
}

std::strong_ordering lambda_compare(const DirectionOrder& order,
                                    LatticePoint u, LatticePoint v) {
    return order.compare(u, v);
}

namespace {

std::int64_t doubled_signed_area(const std::vector<LatticePoint>& pts) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        sum += cross(pts[i], pts[(i + 1) % pts.size()]);
    }
    return sum;
}

// Monotone-chain convex hull (counterclockwise, strictly convex).
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<LatticePoint> hull;
    auto build = [&](auto begin, auto end) {
        std::size_t base = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= base + 2 &&
                   cross(hull.back() - hull[hull.size() - 2], *it - hull.back()) <= 0) {
                hull.pop_back();
            }
            hull.push_back(*it);
        }
        hull.pop_back();
    };
    build(pts.begin(), pts.end());
    build(pts.rbegin(), pts.rend());
    return hull;
}

void rotate_to_min(std::vector<LatticePoint>& pts) {
    auto it = std::min_element(pts.begin(), pts.end());
    std::rotate(pts.begin(), it, pts.end());
}

} // namespace

LatticePolygon make_polygon(std::vector<LatticePoint> input) {
    // Drop consecutive duplicates, including a repeated closing vertex.
    std::vector<LatticePoint> pts;
    for (LatticePoint p : input) {
        if (pts.empty() || pts.back() != p) pts.push_back(p);
    }
    while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();

    if (pts.size() < 3) {
        throw DegeneratePolygon("polygon needs at least 3 distinct vertices");
    }

    std::int64_t area2 = doubled_signed_area(pts);
    if (area2 == 0) {
        // Collinear input is degenerate; a self-cancelling loop is not convex.
        bool collinear = true;
        for (std::size_t i = 2; i < pts.size(); ++i) {
            if (cross(pts[1] - pts[0], pts[i] - pts[0]) != 0) collinear = false;
        }
        if (collinear) throw DegeneratePolygon("polygon has zero area");
        throw NonConvexInput("vertex sequence encloses zero signed area");
    }
    if (area2 < 0) {
        std::reverse(pts.begin(), pts.end());
        area2 = -area2;
    }

    // Absorb collinear intermediate points; reject any right turn.
    bool removed = true;
    while (removed) {
        removed = false;
        std::vector<LatticePoint> kept;
        kept.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            LatticePoint prev = pts[(i + pts.size() - 1) % pts.size()];
            LatticePoint cur = pts[i];
            LatticePoint next = pts[(i + 1) % pts.size()];
            std::int64_t turn = cross(cur - prev, next - cur);
            if (turn < 0) {
                throw NonConvexInput("vertex " + to_string(cur) + " turns clockwise");
            }
            if (turn == 0) {
                if (dot(cur - prev, next - cur) <= 0) {
                    throw NonConvexInput("vertex " + to_string(cur) + " reverses direction");
                }
                removed = true;
                continue; // collinear interior point of the edge prev->next
            }
            kept.push_back(cur);
        }
        pts = std::move(kept);
        if (pts.size() < 3) {
            throw DegeneratePolygon("polygon needs at least 3 extreme points");
        }
    }

    // All turns are now strictly left; rule out a sequence that winds around
    // more than once by comparing with the hull cycle of the vertex set.
    {
        std::set<std::pair<std::int64_t, std::int64_t>> distinct;
        for (LatticePoint p : pts) distinct.insert({p.x, p.y});
        if (distinct.size() != pts.size()) {
            throw NonConvexInput("vertex sequence revisits a point");
        }
        std::vector<LatticePoint> hull = convex_hull(pts);
        std::vector<LatticePoint> cycle = pts;
        rotate_to_min(cycle);
        if (hull != cycle) {
            throw NonConvexInput("vertex sequence is not a convex cycle");
        }
        pts = std::move(cycle);
    }

    LatticePolygon poly;
    poly.vertices_ = std::move(pts);
    poly.doubled_area_ = doubled_signed_area(poly.vertices_);

    // Lattice points by bounding-box scan; the scan order (x, then y) is the
    // deterministic lexicographic order.
    std::int64_t minx = poly.vertices_[0].x, maxx = minx;
    std::int64_t miny = poly.vertices_[0].y, maxy = miny;
    for (LatticePoint v : poly.vertices_) {
        minx = std::min(minx, v.x);
        maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y);
        maxy = std::max(maxy, v.y);
    }
    for (std::int64_t x = minx; x <= maxx; ++x) {
        for (std::int64_t y = miny; y <= maxy; ++y) {
            LatticePoint p{x, y};
            if (poly.contains(p)) {
                poly.all_points_.push_back(p);
                if (poly.contains_interior(p)) poly.interior_points_.push_back(p);
            }
        }
    }

    // Pick's identity ties area to the point counts; a violation means the
    // membership predicates disagree with the shoelace area.
    assert(poly.doubled_area_ ==
           2 * static_cast<std::int64_t>(poly.l()) +
               static_cast<std::int64_t>(poly.boundary_count()) - 2);

    return poly;
}

bool LatticePolygon::contains(LatticePoint p) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        LatticePoint a = vertices_[i];
        LatticePoint b = vertices_[(i + 1) % vertices_.size()];
        if (cross(b - a, p - a) < 0) return false;
    }
    return true;
}

bool LatticePolygon::contains_interior(LatticePoint p) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        LatticePoint a = vertices_[i];
        LatticePoint b = vertices_[(i + 1) % vertices_.size()];
        if (cross(b - a, p - a) <= 0) return false;
    }
    return true;
}

std::pair<LatticePoint, LatticePoint> extreme_vertices(const LatticePolygon& polygon,
                                                       const DirectionOrder& order) {
    // A linear key is extremal on a face, and the tiebreak is strictly
    // monotone along any edge of that face, so scanning corners suffices.
    LatticePoint p = polygon.vertices()[0];
    LatticePoint q = p;
    for (LatticePoint v : polygon.vertices()) {
        if (order.less(v, p)) p = v;
        if (order.less(q, v)) q = v;
    }
    return {p, q};
}

} // namespace latpath
