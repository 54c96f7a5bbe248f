#include "modecluster/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace modecluster {

namespace {

const char* kPalette[12] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
};

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::fixed << v;
    return ss.str();
}

}  // namespace

std::string scplot_svg(const SCPlotData& sc) {
    const int width = 640, height = 420;
    const int ml = 60, mr = 20, mt = 20, mb = 40;
    const double plot_w = width - ml - mr;
    const double plot_h = height - mt - mb;
    const int k = static_cast<int>(sc.sorted_sizes.size());
    const double max_size = std::max<double>(sc.sorted_sizes.empty() ? 1 : sc.sorted_sizes[0],
                                             sc.threshold * 1.1);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const double bar_w = plot_w / std::max(1, k);
    for (int i = 0; i < k; ++i) {
        const double hgt = plot_h * sc.sorted_sizes[static_cast<std::size_t>(i)] / max_size;
        svg << "<rect x=\"" << fmt(ml + i * bar_w + 2) << "\" y=\"" << fmt(mt + plot_h - hgt)
            << "\" width=\"" << fmt(std::max(1.0, bar_w - 4)) << "\" height=\"" << fmt(hgt)
            << "\" fill=\"#4878a8\"/>\n";
    }
    const double ty = mt + plot_h - plot_h * sc.threshold / max_size;
    svg << "<line x1=\"" << ml << "\" y1=\"" << fmt(ty) << "\" x2=\"" << (width - mr)
        << "\" y2=\"" << fmt(ty)
        << "\" stroke=\"#888888\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"/>\n";
    svg << "<text x=\"" << (width - mr - 4) << "\" y=\"" << fmt(ty - 5)
        << "\" text-anchor=\"end\" font-size=\"12\" fill=\"#555555\">n0 = " << sc.threshold
        << "</text>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << (mt + static_cast<int>(plot_h)) << "\" x2=\""
        << (width - mr) << "\" y2=\"" << (mt + static_cast<int>(plot_h))
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << (mt + static_cast<int>(plot_h)) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << (ml + plot_w / 2) << "\" y=\"" << (height - 10)
        << "\" text-anchor=\"middle\" font-size=\"13\">cluster rank</text>\n";
    svg << "<text x=\"16\" y=\"" << (mt + plot_h / 2)
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
        << (mt + plot_h / 2) << ")\">size</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string layout_svg(const LayoutResult& layout, const std::vector<int>& point_labels,
                       const std::vector<std::string>& point_classes) {
    const int width = 720, height = 720;
    const double margin = 40.0;

    double xmin = layout.mode_xy.col(0).minCoeff(), xmax = layout.mode_xy.col(0).maxCoeff();
    double ymin = layout.mode_xy.col(1).minCoeff(), ymax = layout.mode_xy.col(1).maxCoeff();
    if (layout.point_xy.rows() > 0) {
        xmin = std::min(xmin, layout.point_xy.col(0).minCoeff());
        xmax = std::max(xmax, layout.point_xy.col(0).maxCoeff());
        ymin = std::min(ymin, layout.point_xy.col(1).minCoeff());
        ymax = std::max(ymax, layout.point_xy.col(1).maxCoeff());
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double scale = (width - 2 * margin) / span;
    auto px = [&](double x) { return margin + (x - xmin) * scale; };
    auto py = [&](double y) { return height - margin - (y - ymin) * scale; };

    // Color by ground-truth class when provided, else by cluster index.
    std::unordered_map<std::string, int> class_ids;
    auto color_of = [&](Eigen::Index i) -> const char* {
        if (!point_classes.empty()) {
            const int id = class_ids.emplace(point_classes[static_cast<std::size_t>(i)],
                                             static_cast<int>(class_ids.size()))
                               .first->second;
            return kPalette[id % 12];
        }
        return kPalette[point_labels[static_cast<std::size_t>(i)] % 12];
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Edges first, under the points; width follows the connectivity value.
    for (const Edge& e : layout.edges) {
        svg << "<line x1=\"" << fmt(px(layout.mode_xy(e.i, 0))) << "\" y1=\""
            << fmt(py(layout.mode_xy(e.i, 1))) << "\" x2=\"" << fmt(px(layout.mode_xy(e.j, 0)))
            << "\" y2=\"" << fmt(py(layout.mode_xy(e.j, 1)))
            << "\" stroke=\"#999999\" stroke-width=\"" << fmt(1.0 + 10.0 * e.weight)
            << "\"/>\n";
    }
    for (Eigen::Index i = 0; i < layout.point_xy.rows(); ++i) {
        svg << "<circle cx=\"" << fmt(px(layout.point_xy(i, 0))) << "\" cy=\""
            << fmt(py(layout.point_xy(i, 1))) << "\" r=\"2\" fill=\"" << color_of(i)
            << "\" fill-opacity=\"0.7\"/>\n";
    }
    for (Eigen::Index j = 0; j < layout.mode_xy.rows(); ++j) {
        svg << "<circle cx=\"" << fmt(px(layout.mode_xy(j, 0))) << "\" cy=\""
            << fmt(py(layout.mode_xy(j, 1))) << "\" r=\"6\" fill=\""
            << kPalette[j % 12] << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << fmt(px(layout.mode_xy(j, 0)) + 8) << "\" y=\""
            << fmt(py(layout.mode_xy(j, 1)) - 8) << "\" font-size=\"13\">" << (j + 1)
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace modecluster
