#include "latpath/path.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace latpath {

std::string to_string(const LatticePath& path) {
    std::string out;
    for (LatticePoint p : path.points) out += to_string(p);
    return out;
}

std::size_t PathHash::operator()(const LatticePath& path) const {
    // FNV-1a over the coordinate stream.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (LatticePoint p : path.points) {
        mix(static_cast<std::uint64_t>(p.x));
        mix(static_cast<std::uint64_t>(p.y));
    }
    return static_cast<std::size_t>(h);
}

bool is_lambda_increasing(const LatticePath& path, const DirectionOrder& order) {
    for (std::size_t j = 1; j < path.points.size(); ++j) {
        if (!order.less(path.points[j - 1], path.points[j])) return false;
    }
    return true;
}

namespace {

// Appends the lattice points of segment a->b, excluding a itself.
void append_edge_points(std::vector<LatticePoint>& out, LatticePoint a, LatticePoint b) {
    LatticePoint d = b - a;
    std::int64_t g = std::gcd(std::abs(d.x), std::abs(d.y));
    LatticePoint step{d.x / g, d.y / g};
    LatticePoint cur = a;
    for (std::int64_t i = 0; i < g; ++i) {
        cur = cur + step;
        out.push_back(cur);
    }
}

} // namespace

BoundaryChains boundary_chains(const LatticePolygon& polygon, const DirectionOrder& order) {
    auto [p, q] = extreme_vertices(polygon, order);
    const auto& verts = polygon.vertices();
    std::size_t pi = 0, qi = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] == p) pi = i;
        if (verts[i] == q) qi = i;
    }

    const std::size_t count = verts.size();
    auto walk = [&](bool forward) {
        std::vector<LatticePoint> pts{p};
        std::size_t i = pi;
        while (i != qi) {
            std::size_t j = forward ? (i + 1) % count : (i + count - 1) % count;
            append_edge_points(pts, verts[i], verts[j]);
            i = j;
        }
        return LatticePath(std::move(pts));
    };

    BoundaryChains chains;
    chains.alpha_minus = walk(true);  // counterclockwise, the stored orientation
    chains.alpha_plus = walk(false);  // clockwise
    assert(is_lambda_increasing(chains.alpha_plus, order));
    assert(is_lambda_increasing(chains.alpha_minus, order));
    assert(chains.n_plus() + chains.n_minus() == polygon.boundary_count());
    return chains;
}

PathContext make_path_context(LatticePolygon polygon, DirectionOrder order) {
    PathContext ctx{std::move(polygon), order, {}, {}, {}};
    auto [p, q] = extreme_vertices(ctx.polygon, order);
    ctx.p = p;
    ctx.q = q;
    ctx.chains = boundary_chains(ctx.polygon, order);
    return ctx;
}

PathEnumeration::PathEnumeration(const LatticePolygon& polygon, const DirectionOrder& order,
                                 std::size_t edge_count)
    : edge_count_(edge_count) {
    std::size_t m = polygon.m();
    if (edge_count < 1 || edge_count > m) {
        throw InvalidLength("path edge count " + std::to_string(edge_count) +
                            " outside [1, " + std::to_string(m) + "]");
    }
    sorted_ = polygon.all_points();
    std::sort(sorted_.begin(), sorted_.end(),
              [&order](LatticePoint a, LatticePoint b) { return order.less(a, b); });

    // Saturating Pascal triangle; a saturated total means the enumeration is
    // far beyond anything walkable anyway.
    constexpr std::uint64_t cap = std::uint64_t(1) << 62;
    std::size_t middles = m - 1;
    binomial_.assign(middles + 1, std::vector<std::uint64_t>(middles + 1, 0));
    for (std::size_t i = 0; i <= middles; ++i) {
        binomial_[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) {
            std::uint64_t a = binomial_[i - 1][j - 1];
            std::uint64_t b = j <= i - 1 ? binomial_[i - 1][j] : 0;
            binomial_[i][j] = (a >= cap - b) ? cap : a + b;
        }
    }
    size_ = binomial_[middles][edge_count_ - 1];
    if (size_ >= cap) {
        throw Error("path enumeration too large to walk");
    }
}

std::vector<std::size_t> PathEnumeration::subset_at(std::uint64_t rank) const {
    std::size_t middles = middle_count();
    std::size_t k = edge_count_ - 1;
    std::vector<std::size_t> subset(k);
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (std::size_t c = next;; ++c) {
            // paths with subset[slot] == c: choose the rest from above c
            std::uint64_t block = binomial_[middles - 1 - c][k - 1 - slot];
            if (rank < block) {
                subset[slot] = c;
                next = c + 1;
                break;
            }
            rank -= block;
        }
    }
    return subset;
}

bool PathEnumeration::next_subset(std::vector<std::size_t>& subset) const {
    std::size_t middles = middle_count();
    std::size_t k = subset.size();
    for (std::size_t i = k; i-- > 0;) {
        if (subset[i] < middles - (k - i)) {
            ++subset[i];
            for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
            return true;
        }
    }
    return false;
}

LatticePath PathEnumeration::make_path(const std::vector<std::size_t>& subset) const {
    std::vector<LatticePoint> pts;
    pts.reserve(edge_count_ + 1);
    pts.push_back(sorted_.front());
    for (std::size_t idx : subset) pts.push_back(sorted_[idx + 1]);
    pts.push_back(sorted_.back());
    return LatticePath(std::move(pts));
}

std::int64_t triangle_double_area(LatticePoint a, LatticePoint b, LatticePoint c) {
    return std::abs(cross(b - a, c - b));
}

std::optional<PivotData> find_pivot(const LatticePath& path, Side side) {
    for (std::size_t k = 1; k + 1 < path.points.size(); ++k) {
        LatticePoint before = path.points[k - 1];
        LatticePoint apex = path.points[k];
        LatticePoint after = path.points[k + 1];
        std::int64_t turn = cross(apex - before, after - apex);
        if ((side == Side::plus && turn > 0) || (side == Side::minus && turn < 0)) {
            return PivotData{k, before, apex, after, std::abs(turn), before + after - apex};
        }
    }
    return std::nullopt;
}

SurgeryResult apply_surgery(const LatticePath& path, const PivotData& pivot,
                            const LatticePolygon& polygon) {
    SurgeryResult result;
    result.dropped.points.reserve(path.points.size() - 1);
    for (std::size_t j = 0; j < path.points.size(); ++j) {
        if (j != pivot.k) result.dropped.points.push_back(path.points[j]);
    }
    result.reflected.points = path.points;
    result.reflected.points[pivot.k] = pivot.reflected;
    result.reflected_inside = polygon.contains(pivot.reflected);
    return result;
}

std::int64_t doubled_region_area(const LatticePath& path, const LatticePath& chain) {
    // Shoelace of the loop: path forward, chain backward (shared endpoints
    // dropped once). The pockets between the two increasing paths all carry
    // the same sign, so the absolute value is the total doubled area.
    std::vector<LatticePoint> loop = path.points;
    for (std::size_t i = chain.points.size() - 1; i-- > 1;) {
        loop.push_back(chain.points[i]);
    }
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        sum += cross(loop[i], loop[(i + 1) % loop.size()]);
    }
    return std::abs(sum);
}

} // namespace latpath
