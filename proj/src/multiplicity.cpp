#include "latpath/multiplicity.hpp"

#include <cassert>
#include <utility>

namespace latpath {

void MultiplicityEngine::check_endpoints(const LatticePath& path) const {
    if (path.points.empty() || path.front() != ctx_->p || path.back() != ctx_->q) {
        throw ContextMismatch("path endpoints " +
                              (path.points.empty() ? std::string("<empty>")
                                                   : to_string(path.front()) + ".." + to_string(path.back())) +
                              " do not match the context extrema " + to_string(ctx_->p) +
                              ".." + to_string(ctx_->q));
    }
}

Integer MultiplicityEngine::mu_side(const LatticePath& path, Side side) {
    check_endpoints(path);
    auto& memo = side == Side::plus ? memo_plus_ : memo_minus_;
    const LatticePath& alpha = ctx_->alpha(side == Side::plus);

    struct Frame {
        LatticePath path;
        PivotData pivot;
        SurgeryResult surgery;
        bool expanded = false;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{path, {}, {}, false});

    while (!stack.empty()) {
        Frame& frame = stack.back();
        if (memo.contains(frame.path)) {
            stack.pop_back();
            continue;
        }
        if (!frame.expanded) {
            if (frame.path == alpha) {
                memo.emplace(std::move(frame.path), 1);
                stack.pop_back();
                continue;
            }
            auto pivot = find_pivot(frame.path, side);
            if (!pivot) {
                memo.emplace(std::move(frame.path), 0);
                stack.pop_back();
                continue;
            }
            frame.pivot = *pivot;
            frame.surgery = apply_surgery(frame.path, frame.pivot, ctx_->polygon);
            frame.expanded = true;
#ifndef NDEBUG
            // Both surgeries strictly shrink the region between the path and
            // the side chain: the recursion terminates.
            std::int64_t area = doubled_region_area(frame.path, alpha);
            assert(doubled_region_area(frame.surgery.dropped, alpha) == area - frame.pivot.doubled_area);
            if (frame.surgery.reflected_inside) {
                assert(doubled_region_area(frame.surgery.reflected, alpha) ==
                       area - 2 * frame.pivot.doubled_area);
            }
            assert(is_lambda_increasing(frame.surgery.dropped, ctx_->order));
            assert(is_lambda_increasing(frame.surgery.reflected, ctx_->order));
#endif
            // Note: pushing may invalidate `frame`; copy the children first.
            LatticePath dropped = frame.surgery.dropped;
            LatticePath reflected = frame.surgery.reflected;
            bool inside = frame.surgery.reflected_inside;
            if (!memo.contains(dropped)) stack.push_back(Frame{std::move(dropped), {}, {}, false});
            if (inside && !memo.contains(reflected)) {
                stack.push_back(Frame{std::move(reflected), {}, {}, false});
            }
            continue;
        }
        Integer value = Integer(frame.pivot.doubled_area) * memo.at(frame.surgery.dropped);
        if (frame.surgery.reflected_inside) value += memo.at(frame.surgery.reflected);
        memo.emplace(std::move(frame.path), std::move(value));
        stack.pop_back();
    }
    return memo.at(path);
}

MultiplicityRecord MultiplicityEngine::mu(const LatticePath& path) {
    MultiplicityRecord rec;
    rec.mu_plus = mu_side(path, Side::plus);
    rec.mu_minus = mu_side(path, Side::minus);
    rec.mu = rec.mu_plus * rec.mu_minus;
    return rec;
}

} // namespace latpath
