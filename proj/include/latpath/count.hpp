#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latpath/multiplicity.hpp"
#include "latpath/real.hpp"

namespace latpath {

enum class CountKind { complex_curves, real_curves, welschinger };

std::string to_string(CountKind kind);
CountKind parse_count_kind(std::string_view text);

struct PathContribution {
    LatticePath path;
    MultiplicityRecord mu;       // filled for every kind
    RealMultiplicityRecord real; // mu_r fields for real counts, nu fields for signed counts
    Integer contribution;        // the value this path adds to the total

    bool operator==(const PathContribution&) const = default;
};

struct CountReport {
    CountKind kind = CountKind::complex_curves;
    std::vector<LatticePoint> polygon; // normalized vertices
    std::string lambda;
    std::size_t m = 0;
    std::size_t l = 0;
    std::size_t delta = 0;
    std::size_t n = 0; // m - delta
    std::optional<std::string> signs;
    Integer total;
    std::uint64_t enumerated = 0;
    std::uint64_t nonzero = 0;
    std::int64_t elapsed_ms = 0;
    std::vector<PathContribution> per_path; // enumeration order

    bool operator==(const CountReport&) const = default;
};

struct CountOptions {
    // 0 = automatic: LATPATH_THREADS when set, hardware concurrency otherwise.
    unsigned workers = 0;
    AllEvenRule all_even_rule = AllEvenRule::pivot_edges;
};

// Total of mu_plus * mu_minus over all increasing paths with m - delta edges:
// the curve count for the polygon at genus l - delta.
CountReport count_complex(const LatticePolygon& polygon, const DirectionOrder& order,
                          std::size_t delta, const CountOptions& options = {});

// Total of the real multiplicities for a fixed quadrant sign sequence.
CountReport count_real(const LatticePolygon& polygon, const DirectionOrder& order,
                       std::size_t delta, const SignSequence& signs,
                       const CountOptions& options = {});

// Signed total of nu_plus * nu_minus (Welschinger-style count).
CountReport count_welschinger(const LatticePolygon& polygon, const DirectionOrder& order,
                              std::size_t delta, const CountOptions& options = {});

// Runs the complex count under several orders; the totals must agree.
struct SweepResult {
    std::size_t delta = 0;
    std::vector<std::pair<std::string, Integer>> totals;
    bool consistent = false;
};

SweepResult invariance_sweep(const LatticePolygon& polygon, std::size_t delta,
                             const std::vector<DirectionOrder>& orders,
                             const CountOptions& options = {});

// 3(d-1)^2, the nodal-curve count for the degree-d triangle.
std::int64_t discriminant_degree(std::int64_t d);

// sum of component genera, plus one, minus the component count. May be
// negative for reducible curves.
std::int64_t multicomponent_genus(const std::vector<std::int64_t>& genera);

struct RegistryCase {
    std::vector<LatticePoint> polygon;
    std::size_t delta = 0;
    std::string lambda;
    CountKind kind = CountKind::complex_curves;
    std::optional<std::string> signs;
    Integer expected;
    std::string provenance;
};

struct RegistryOutcome {
    RegistryCase entry;
    Integer actual;
    bool pass = false;
};

struct RegistryReport {
    std::vector<RegistryOutcome> outcomes;

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& o : outcomes) n += o.pass ? 0 : 1;
        return n;
    }
    bool all_pass() const { return failures() == 0; }
};

RegistryReport verify_registry(const std::vector<RegistryCase>& cases,
                               const CountOptions& options = {});

} // namespace latpath
