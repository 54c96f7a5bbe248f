#include "modecluster/denoise.hpp"

#include <algorithm>
#include <numeric>

namespace modecluster {

namespace {

std::vector<int> significant_clusters(const std::vector<int>& sizes, double n0) {
    std::vector<int> sig;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        if (sizes[j] >= n0) sig.push_back(static_cast<int>(j));
    }
    return sig;
}

bool has_insignificant(const std::vector<int>& sizes, double n0) {
    return std::any_of(sizes.begin(), sizes.end(), [n0](int s) { return s < n0; });
}

}  // namespace

SCPlotData sc_plot(const ClusterAssignment& assign, double n0) {
    if (assign.sizes.empty()) throw InvalidInput("sc_plot: empty assignment");
    SCPlotData sc;
    sc.sorted_sizes = assign.sizes;
    std::sort(sc.sorted_sizes.begin(), sc.sorted_sizes.end(), std::greater<int>());
    sc.threshold = n0;
    return sc;
}

std::pair<ModeSet, ClusterAssignment> denoise(const DensityModel& model,
                                              const ModeSet& modes,
                                              const ClusterAssignment& assign,
                                              double n0,
                                              const MeanShiftOptions& opts,
                                              int max_rounds) {
    const Eigen::Index n = model.n();
    if (static_cast<Eigen::Index>(assign.labels.size()) != n) {
        throw InvalidInput("denoise: assignment does not match model data");
    }
    if (significant_clusters(assign.sizes, n0).empty()) {
        throw AllClustersInsignificant("denoise: no cluster reaches size " + std::to_string(n0));
    }
    if (!has_insignificant(assign.sizes, n0)) {
        return {modes, assign};  // nothing to merge
    }

    ModeSet cur_modes = modes;
    ClusterAssignment cur_assign = assign;
    for (int round = 0; round < max_rounds; ++round) {
        const std::vector<int> sig = significant_clusters(cur_assign.sizes, n0);
        if (sig.empty()) {
            throw AllClustersInsignificant("denoise: no cluster reaches size "
                                           + std::to_string(n0));
        }

        // Density estimate on the points of significant clusters only (same h).
        std::vector<Eigen::Index> keep;
        for (Eigen::Index i = 0; i < n; ++i) {
            const int lbl = cur_assign.labels[static_cast<std::size_t>(i)];
            if (std::binary_search(sig.begin(), sig.end(), lbl)) keep.push_back(i);
        }
        Eigen::MatrixXd reduced(static_cast<Eigen::Index>(keep.size()), model.d());
        for (std::size_t r = 0; r < keep.size(); ++r) reduced.row(static_cast<Eigen::Index>(r)) = model.data().row(keep[r]);
        DensityModel reduced_model(std::move(reduced), model.h());

        // Re-run the ascent for all n points under the reduced model.
        std::tie(cur_modes, cur_assign) = cluster_points(reduced_model, model.data(), opts);
        if (!has_insignificant(cur_assign.sizes, n0)) {
            return {std::move(cur_modes), std::move(cur_assign)};
        }
    }

    // Fallback after max_rounds: move residual tiny-cluster points to the
    // nearest significant mode.
    const std::vector<int> sig = significant_clusters(cur_assign.sizes, n0);
    if (sig.empty()) {
        throw AllClustersInsignificant("denoise: no cluster reaches size " + std::to_string(n0));
    }
    const int ks = static_cast<int>(sig.size());
    std::vector<int> new_id(cur_assign.sizes.size(), -1);
    for (int pos = 0; pos < ks; ++pos) new_id[static_cast<std::size_t>(sig[pos])] = pos;

    ModeSet out_modes;
    out_modes.modes.resize(ks, model.d());
    for (int pos = 0; pos < ks; ++pos) out_modes.modes.row(pos) = cur_modes.modes.row(sig[pos]);

    ClusterAssignment out = cur_assign;
    out.sizes.assign(static_cast<std::size_t>(ks), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
        const int lbl = cur_assign.labels[static_cast<std::size_t>(i)];
        int dst = new_id[static_cast<std::size_t>(lbl)];
        if (dst < 0) {
            dst = 0;
            double best = (model.data().row(i) - out_modes.modes.row(0)).norm();
            for (int g = 1; g < ks; ++g) {
                const double dd = (model.data().row(i) - out_modes.modes.row(g)).norm();
                if (dd < best) {
                    best = dd;
                    dst = g;
                }
            }
        }
        out.labels[static_cast<std::size_t>(i)] = dst;
        ++out.sizes[static_cast<std::size_t>(dst)];
    }
    out.force_assigned = true;

    // Keep the size-descending mode order after reassignment.
    std::vector<int> order(static_cast<std::size_t>(ks));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return out.sizes[a] > out.sizes[b]; });
    std::vector<int> remap(static_cast<std::size_t>(ks));
    for (int pos = 0; pos < ks; ++pos) remap[static_cast<std::size_t>(order[pos])] = pos;
    ModeSet final_modes;
    final_modes.modes.resize(ks, model.d());
    std::vector<int> final_sizes(static_cast<std::size_t>(ks));
    for (int pos = 0; pos < ks; ++pos) {
        final_modes.modes.row(pos) = out_modes.modes.row(order[pos]);
        final_sizes[static_cast<std::size_t>(pos)] = out.sizes[static_cast<std::size_t>(order[pos])];
    }
    for (auto& lbl : out.labels) lbl = remap[static_cast<std::size_t>(lbl)];
    out.sizes = std::move(final_sizes);
    return {std::move(final_modes), std::move(out)};
}

}  // namespace modecluster
