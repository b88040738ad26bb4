#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latpath/count.hpp"

namespace latpath {

// Selection and layout for path diagrams: one panel per selected path with
// the polygon outline, the lattice dots, the path polyline and a
// multiplicity caption.
struct RenderSpec {
    enum class Target { all, nonzero, explicit_indices };
    enum class Format { svg, ascii };

    Target target = Target::nonzero;
    std::vector<std::size_t> indices; // used when target == explicit_indices
    Format format = Format::svg;
    int cell = 28; // pixels per lattice unit (svg), columns per unit (ascii)
    bool annotate = true;
};

std::string render_report(const CountReport& report, const RenderSpec& spec);

} // namespace latpath
