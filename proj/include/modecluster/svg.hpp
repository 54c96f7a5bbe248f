#pragma once

#include <string>
#include <vector>

#include "modecluster/denoise.hpp"
#include "modecluster/layout.hpp"

namespace modecluster {

// Bar chart of descending cluster sizes with a horizontal line at the
// significance threshold.
std::string scplot_svg(const SCPlotData& sc);

// Scatter plot of the two-stage layout: one circle per point colored by
// cluster index (or by ground-truth label when point_classes is given),
// a larger marker per mode, and straight edges between connected modes
// with stroke width 1 + 10 * omega.
std::string layout_svg(const LayoutResult& layout, const std::vector<int>& point_labels,
                       const std::vector<std::string>& point_classes = {});

}  // namespace modecluster
