#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latpath/geometry.hpp"

namespace latpath {

// A lattice path gamma(0..n), determined by its values at integer points.
// When bound to a DirectionOrder it is kept strictly increasing, so a path is
// exactly a subset of lattice points listed in order.
struct LatticePath {
    std::vector<LatticePoint> points;

    LatticePath() = default;
    explicit LatticePath(std::vector<LatticePoint> pts) : points(std::move(pts)) {}

    std::size_t edge_count() const { return points.empty() ? 0 : points.size() - 1; }
    LatticePoint front() const { return points.front(); }
    LatticePoint back() const { return points.back(); }

    bool operator==(const LatticePath&) const = default;
};

std::string to_string(const LatticePath& path);

struct PathHash {
    std::size_t operator()(const LatticePath& path) const;
};

bool is_lambda_increasing(const LatticePath& path, const DirectionOrder& order);

// The extrema p, q split the boundary into two increasing chains through
// every boundary lattice point: alpha_plus walks clockwise (against the
// stored counterclockwise orientation), alpha_minus counterclockwise.
struct BoundaryChains {
    LatticePath alpha_plus;
    LatticePath alpha_minus;

    std::size_t n_plus() const { return alpha_plus.edge_count(); }
    std::size_t n_minus() const { return alpha_minus.edge_count(); }
};

BoundaryChains boundary_chains(const LatticePolygon& polygon, const DirectionOrder& order);

// Everything the multiplicity recursions need about a (polygon, order) pair.
struct PathContext {
    LatticePolygon polygon;
    DirectionOrder order;
    LatticePoint p;
    LatticePoint q;
    BoundaryChains chains;

    const LatticePath& alpha(bool plus_side) const {
        return plus_side ? chains.alpha_plus : chains.alpha_minus;
    }
};

PathContext make_path_context(LatticePolygon polygon, DirectionOrder order);

// All strictly increasing paths with a fixed edge count n from p to q are the
// (n-1)-subsets of the m-1 lattice points strictly between them, generated in
// lexicographic order of rank subsets. Subset ranks give reproducible order
// and cheap work splitting.
class PathEnumeration {
public:
    PathEnumeration(const LatticePolygon& polygon, const DirectionOrder& order,
                    std::size_t edge_count);

    std::uint64_t size() const { return size_; }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t middle_count() const { return sorted_.size() - 2; }

    // subset = increasing indices into the middle points (0-based).
    std::vector<std::size_t> subset_at(std::uint64_t rank) const;
    bool next_subset(std::vector<std::size_t>& subset) const;
    LatticePath make_path(const std::vector<std::size_t>& subset) const;
    LatticePath at(std::uint64_t rank) const { return make_path(subset_at(rank)); }

private:
    std::vector<LatticePoint> sorted_; // lambda-sorted points of the polygon
    std::size_t edge_count_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::vector<std::uint64_t>> binomial_; // saturating Pascal table
};

enum class Side { plus, minus };

constexpr Side opposite(Side s) { return s == Side::plus ? Side::minus : Side::plus; }

// The pivot of a path for one side: the first interior vertex where the
// enclosed region on that side is locally convex. With the polygon stored
// counterclockwise this is a pure turn test, a left turn for the plus side
// and a right turn for the minus side.
struct PivotData {
    std::size_t k = 0;            // interior index, 1 <= k <= n-1
    LatticePoint before;          // gamma(k-1)
    LatticePoint apex;            // gamma(k)
    LatticePoint after;           // gamma(k+1)
    std::int64_t doubled_area = 0; // 2 Area of the pivot triangle, > 0
    LatticePoint reflected;       // gamma(k-1) + gamma(k+1) - gamma(k)
};

std::optional<PivotData> find_pivot(const LatticePath& path, Side side);

std::int64_t triangle_double_area(LatticePoint a, LatticePoint b, LatticePoint c);

// gamma' drops the pivot vertex, gamma'' replaces it by the opposite corner
// of the parallelogram. Both stay strictly increasing; gamma'' may leave the
// polygon, which the flag records.
struct SurgeryResult {
    LatticePath dropped;    // gamma', one edge shorter
    LatticePath reflected;  // gamma'', same length
    bool reflected_inside = false;
};

SurgeryResult apply_surgery(const LatticePath& path, const PivotData& pivot,
                            const LatticePolygon& polygon);

// Doubled area enclosed between a path and a boundary chain with the same
// endpoints: the termination measure of the multiplicity recursions. Surgery
// shrinks it by doubled_area for gamma' and twice that for gamma''.
std::int64_t doubled_region_area(const LatticePath& path, const LatticePath& chain);

} // namespace latpath
