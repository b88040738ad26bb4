#pragma once

#include <unordered_map>

#include "latpath/integer.hpp"
#include "latpath/path.hpp"

namespace latpath {

struct MultiplicityRecord {
    Integer mu_plus;
    Integer mu_minus;
    Integer mu; // mu_plus * mu_minus

    bool operator==(const MultiplicityRecord&) const = default;
};

// Evaluates the side multiplicities of increasing paths from p to q:
//
//   mu(alpha_side) = 1
//   mu(gamma)      = 0                              if gamma has no pivot
//   mu(gamma)      = 2*Area(T) * mu(gamma') + mu(gamma'')
//
// with gamma'' contributing 0 when its reflected vertex leaves the polygon.
// Identical subpaths recur across branches and across enumerated paths, so
// values are memoized per side, keyed by the exact point sequence. The
// recursion runs on an explicit work stack: call depth would otherwise grow
// with the enclosed area.
class MultiplicityEngine {
public:
    explicit MultiplicityEngine(const PathContext& ctx) : ctx_(&ctx) {}

    Integer mu_side(const LatticePath& path, Side side);
    MultiplicityRecord mu(const LatticePath& path);

private:
    void check_endpoints(const LatticePath& path) const;

    const PathContext* ctx_;
    std::unordered_map<LatticePath, Integer, PathHash> memo_plus_;
    std::unordered_map<LatticePath, Integer, PathHash> memo_minus_;
};

} // namespace latpath
