#include "modecluster/meanshift.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "modecluster/parallel.hpp"

namespace modecluster {

namespace {

struct AscendStatus {
    Eigen::VectorXd point;
    bool converged = false;
};

// Weights are shifted by the smallest scaled distance before
// exponentiation; the update is invariant to that common factor and stays
// well-defined for starting points far outside the data hull.
AscendStatus ascend_impl(const DensityModel& model, const Eigen::VectorXd& x0,
                         const MeanShiftOptions& opts) {
    const Eigen::MatrixXd& data = model.data();
    const double tol = opts.tol(model.h());
    Eigen::VectorXd x = x0;
    for (int it = 0; it < opts.max_iter; ++it) {
        const Eigen::VectorXd u2 = model.scaled_sq_dists(x);
        const double shift = u2.minCoeff();
        const Eigen::ArrayXd w = (0.5 * (shift - u2.array())).exp();
        const Eigen::VectorXd xnew = (data.transpose() * w.matrix()) / w.sum();
        const double step = (xnew - x).norm();
        x = xnew;
        if (step < tol) return {x, true};
    }
    return {x, false};
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

Eigen::VectorXd ascend(const DensityModel& model, const Eigen::VectorXd& x0,
                       const MeanShiftOptions& opts) {
    if (x0.size() != model.d() || !x0.allFinite()) {
        throw InvalidInput("ascend: starting point must be finite with matching dimension");
    }
    AscendStatus res = ascend_impl(model, x0, opts);
    if (!res.converged) {
        throw NonConvergence("ascend: no convergence after "
                                 + std::to_string(opts.max_iter) + " iterations",
                             res.point);
    }
    return res.point;
}

std::pair<ModeSet, ClusterAssignment> cluster(const DensityModel& model,
                                              const MeanShiftOptions& opts) {
    return cluster_points(model, model.data(), opts);
}

std::pair<ModeSet, ClusterAssignment> cluster_points(const DensityModel& model,
                                                     const Eigen::MatrixXd& query,
                                                     const MeanShiftOptions& opts) {
    const Eigen::Index n = query.rows();
    const Eigen::Index d = model.d();
    if (n < 1 || query.cols() != d) {
        throw InvalidInput("cluster_points: query must be nonempty with matching dimension");
    }

    ClusterAssignment assign;
    assign.destinations.resize(n, d);
    std::vector<char> converged(static_cast<std::size_t>(n), 0);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        AscendStatus res = ascend_impl(model, query.row(static_cast<Eigen::Index>(i)), opts);
        assign.destinations.row(static_cast<Eigen::Index>(i)) = res.point;
        converged[i] = res.converged ? 1 : 0;
    }, opts.threads);

    std::vector<int> conv_idx;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (converged[static_cast<std::size_t>(i)]) {
            conv_idx.push_back(static_cast<int>(i));
        } else {
            assign.nonconverged.push_back(static_cast<int>(i));
        }
    }
    if (conv_idx.empty()) {
        throw NonConvergence("cluster: no ascent converged", assign.destinations.row(0));
    }

    // Single-linkage merge of converged destinations.
    const double radius = opts.merge_radius(model.h());
    const int m = static_cast<int>(conv_idx.size());
    UnionFind uf(m);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if ((assign.destinations.row(conv_idx[a]) - assign.destinations.row(conv_idx[b]))
                    .norm() <= radius) {
                uf.unite(a, b);
            }
        }
    }

    std::vector<int> group_of(m);       // conv position -> group id (by first occurrence)
    std::vector<std::vector<int>> groups;  // group id -> conv positions
    {
        std::vector<int> root_to_group;
        for (int a = 0; a < m; ++a) {
            const int r = uf.find(a);
            int g = -1;
            for (std::size_t gi = 0; gi < root_to_group.size(); ++gi) {
                if (root_to_group[gi] == r) {
                    g = static_cast<int>(gi);
                    break;
                }
            }
            if (g < 0) {
                g = static_cast<int>(root_to_group.size());
                root_to_group.push_back(r);
                groups.emplace_back();
            }
            group_of[a] = g;
            groups[static_cast<std::size_t>(g)].push_back(a);
        }
    }
    const int k = static_cast<int>(groups.size());

    // Mode of a group: the member destination with the highest density.
    std::vector<double> dest_density(static_cast<std::size_t>(m));
    parallel_for(static_cast<std::size_t>(m), [&](std::size_t a) {
        dest_density[a] = model.density(assign.destinations.row(conv_idx[a]));
    }, opts.threads);

    Eigen::MatrixXd reps(k, d);
    for (int g = 0; g < k; ++g) {
        int best = groups[static_cast<std::size_t>(g)].front();
        for (int a : groups[static_cast<std::size_t>(g)]) {
            if (dest_density[static_cast<std::size_t>(a)] >
                dest_density[static_cast<std::size_t>(best)]) {
                best = a;
            }
        }
        reps.row(g) = assign.destinations.row(conv_idx[best]);
    }

    // Raw labels; non-converged points go to the mode nearest their last iterate.
    std::vector<int> raw_label(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < m; ++a) raw_label[static_cast<std::size_t>(conv_idx[a])] = group_of[a];
    for (int i : assign.nonconverged) {
        int best = 0;
        double best_d = (assign.destinations.row(i) - reps.row(0)).norm();
        for (int g = 1; g < k; ++g) {
            const double dd = (assign.destinations.row(i) - reps.row(g)).norm();
            if (dd < best_d) {
                best_d = dd;
                best = g;
            }
        }
        raw_label[static_cast<std::size_t>(i)] = best;
    }

    std::vector<int> raw_size(static_cast<std::size_t>(k), 0);
    std::vector<int> first_occurrence(static_cast<std::size_t>(k), static_cast<int>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const int g = raw_label[static_cast<std::size_t>(i)];
        ++raw_size[static_cast<std::size_t>(g)];
        first_occurrence[static_cast<std::size_t>(g)] =
            std::min(first_occurrence[static_cast<std::size_t>(g)], static_cast<int>(i));
    }

    // Final mode order: descending size, ties by first occurrence.
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (raw_size[a] != raw_size[b]) return raw_size[a] > raw_size[b];
        return first_occurrence[a] < first_occurrence[b];
    });
    std::vector<int> new_id(static_cast<std::size_t>(k));
    for (int pos = 0; pos < k; ++pos) new_id[static_cast<std::size_t>(order[pos])] = pos;

    ModeSet modes;
    modes.modes.resize(k, d);
    assign.sizes.assign(static_cast<std::size_t>(k), 0);
    for (int pos = 0; pos < k; ++pos) {
        modes.modes.row(pos) = reps.row(order[pos]);
        assign.sizes[static_cast<std::size_t>(pos)] = raw_size[static_cast<std::size_t>(order[pos])];
    }
    assign.labels.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        assign.labels[static_cast<std::size_t>(i)] =
            new_id[static_cast<std::size_t>(raw_label[static_cast<std::size_t>(i)])];
    }
    return {std::move(modes), std::move(assign)};
}

}  // namespace modecluster
