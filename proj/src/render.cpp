#include "latpath/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace latpath {

namespace {

std::vector<std::size_t> select_paths(const CountReport& report, const RenderSpec& spec) {
    std::vector<std::size_t> selected;
    switch (spec.target) {
        case RenderSpec::Target::all:
            for (std::size_t i = 0; i < report.per_path.size(); ++i) selected.push_back(i);
            break;
        case RenderSpec::Target::nonzero:
            for (std::size_t i = 0; i < report.per_path.size(); ++i) {
                if (report.per_path[i].contribution != 0) selected.push_back(i);
            }
            break;
        case RenderSpec::Target::explicit_indices:
            for (std::size_t i : spec.indices) {
                if (i >= report.per_path.size()) {
                    throw Error("render: path index " + std::to_string(i) + " out of range");
                }
                selected.push_back(i);
            }
            break;
    }
    return selected;
}

std::string caption_text(const CountReport& report, const PathContribution& c) {
    switch (report.kind) {
        case CountKind::complex_curves:
            return "mu=" + c.mu.mu.str();
        case CountKind::real_curves:
            return "muR=" + c.real.mu_r.str() + " (mu=" + c.mu.mu.str() + ")";
        case CountKind::welschinger:
            return "nu=" + c.real.nu.str();
    }
    return "";
}

struct Box {
    std::int64_t minx = 0, maxx = 0, miny = 0, maxy = 0;
};

Box bounding_box(const std::vector<LatticePoint>& points) {
    Box box{points[0].x, points[0].x, points[0].y, points[0].y};
    for (LatticePoint p : points) {
        box.minx = std::min(box.minx, p.x);
        box.maxx = std::max(box.maxx, p.x);
        box.miny = std::min(box.miny, p.y);
        box.maxy = std::max(box.maxy, p.y);
    }
    return box;
}

std::string render_svg(const CountReport& report, const RenderSpec& spec,
                       const LatticePolygon& polygon,
                       const std::vector<std::size_t>& selected) {
    const int cell = spec.cell;
    const int margin = cell;
    const Box box = bounding_box(polygon.vertices());
    const int grid_w = static_cast<int>(box.maxx - box.minx) * cell;
    const int grid_h = static_cast<int>(box.maxy - box.miny) * cell;
    const int caption_h = spec.annotate ? cell : 0;
    const int panel_w = grid_w + 2 * margin;
    const int panel_h = grid_h + 2 * margin + caption_h;

    const std::size_t panels = std::max<std::size_t>(selected.size(), 1);
    const std::size_t cols =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(panels))));
    const std::size_t rows = (panels + cols - 1) / cols;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << cols * panel_w << "\" height=\"" << rows * panel_h << "\">\n";

    // lattice point (x, y) -> (cell*x, -cell*y), shifted into the panel
    auto sx = [&](std::size_t col, std::int64_t x) {
        return static_cast<std::int64_t>(col) * panel_w + margin + (x - box.minx) * cell;
    };
    auto sy = [&](std::size_t row, std::int64_t y) {
        return static_cast<std::int64_t>(row) * panel_h + margin + (box.maxy - y) * cell;
    };

    auto draw_panel = [&](std::size_t panel, const PathContribution* contribution,
                          std::size_t path_index) {
        std::size_t col = panel % cols;
        std::size_t row = panel / cols;
        svg << "  <g class=\"panel\">\n";
        svg << "    <polygon points=\"";
        for (std::size_t i = 0; i < polygon.vertices().size(); ++i) {
            LatticePoint v = polygon.vertices()[i];
            if (i > 0) svg << ' ';
            svg << sx(col, v.x) << ',' << sy(row, v.y);
        }
        svg << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
        for (LatticePoint p : polygon.all_points()) {
            svg << "    <circle class=\"lattice\" cx=\"" << sx(col, p.x) << "\" cy=\""
                << sy(row, p.y) << "\" r=\"2\" fill=\"#bbbbbb\"/>\n";
        }
        if (contribution != nullptr) {
            svg << "    <polyline points=\"";
            for (std::size_t i = 0; i < contribution->path.points.size(); ++i) {
                LatticePoint p = contribution->path.points[i];
                if (i > 0) svg << ' ';
                svg << sx(col, p.x) << ',' << sy(row, p.y);
            }
            svg << "\" fill=\"none\" stroke=\"#202020\" stroke-width=\"2\"/>\n";
            for (LatticePoint p : contribution->path.points) {
                svg << "    <circle class=\"path-node\" cx=\"" << sx(col, p.x) << "\" cy=\""
                    << sy(row, p.y) << "\" r=\"4\" fill=\"#202020\"/>\n";
            }
            if (spec.annotate) {
                svg << "    <text class=\"caption\" x=\"" << sx(col, box.minx) << "\" y=\""
                    << sy(row, box.miny) + margin / 2 + caption_h / 2
                    << "\" font-family=\"monospace\" font-size=\"" << cell / 2 << "\">#"
                    << path_index << ' ' << caption_text(report, *contribution) << "</text>\n";
            }
        }
        svg << "  </g>\n";
    };

    if (selected.empty()) {
        draw_panel(0, nullptr, 0);
    } else {
        for (std::size_t i = 0; i < selected.size(); ++i) {
            draw_panel(i, &report.per_path[selected[i]], selected[i]);
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_ascii(const CountReport& report, const RenderSpec& spec,
                         const LatticePolygon& polygon,
                         const std::vector<std::size_t>& selected) {
    const Box box = bounding_box(polygon.vertices());
    const std::size_t width =
        static_cast<std::size_t>(box.maxx - box.minx) * static_cast<std::size_t>(spec.cell) + 1;

    auto panel = [&](const PathContribution* contribution, std::size_t path_index) {
        std::ostringstream out;
        if (spec.annotate && contribution != nullptr) {
            out << '#' << path_index << ' ' << caption_text(report, *contribution) << '\n';
        }
        for (std::int64_t y = box.maxy; y >= box.miny; --y) {
            std::string line(width, ' ');
            for (std::int64_t x = box.minx; x <= box.maxx; ++x) {
                LatticePoint p{x, y};
                if (!polygon.contains(p)) continue;
                std::size_t column = static_cast<std::size_t>(x - box.minx) *
                                     static_cast<std::size_t>(spec.cell);
                char mark = '.';
                if (contribution != nullptr) {
                    const auto& pts = contribution->path.points;
                    if (std::find(pts.begin(), pts.end(), p) != pts.end()) mark = '#';
                }
                line[column] = mark;
            }
            out << line << '\n';
        }
        out << '\n';
        return out.str();
    };

    std::ostringstream out;
    if (selected.empty()) {
        out << panel(nullptr, 0);
    } else {
        for (std::size_t i : selected) out << panel(&report.per_path[i], i);
    }
    return out.str();
}

} // namespace

std::string render_report(const CountReport& report, const RenderSpec& spec) {
    if (spec.cell <= 0) throw Error("render: cell size must be positive");
    LatticePolygon polygon = make_polygon(report.polygon);
    std::vector<std::size_t> selected = select_paths(report, spec);
    if (spec.format == RenderSpec::Format::svg) {
        return render_svg(report, spec, polygon, selected);
    }
    return render_ascii(report, spec, polygon, selected);
}

} // namespace latpath
