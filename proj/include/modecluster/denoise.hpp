#pragma once

#include <utility>
#include <vector>

#include "modecluster/meanshift.hpp"

namespace modecluster {

// Size-of-cluster plot data: cluster sizes in descending order plus the
// significance threshold n0.
struct SCPlotData {
    std::vector<int> sorted_sizes;
    double threshold = 0.0;
};

SCPlotData sc_plot(const ClusterAssignment& assign, double n0);

// Merges insignificant clusters (size < n0). Each round removes the
// points of tiny clusters from the density estimate (same h), re-runs the
// mean-shift ascent for all n points under the reduced model, and
// re-checks sizes; after max_rounds any residual tiny-cluster point is
// assigned to the nearest significant mode. Throws
// AllClustersInsignificant when no cluster reaches n0.
std::pair<ModeSet, ClusterAssignment> denoise(const DensityModel& model,
                                              const ModeSet& modes,
                                              const ClusterAssignment& assign,
                                              double n0,
                                              const MeanShiftOptions& opts = {},
                                              int max_rounds = 10);

}  // namespace modecluster
