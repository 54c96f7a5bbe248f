#include "modecluster/connectivity.hpp"

namespace modecluster {

ConnectivityMatrix connectivity_matrix(const SoftAssignment& a,
                                       const ClusterAssignment& assign) {
    const Eigen::Index n = a.n();
    const Eigen::Index k = a.k();
    if (static_cast<Eigen::Index>(assign.labels.size()) != n) {
        throw InvalidInput("connectivity_matrix: label count does not match soft assignment");
    }
    if (static_cast<Eigen::Index>(assign.sizes.size()) != k) {
        throw InvalidInput("connectivity_matrix: cluster count does not match soft assignment");
    }

    std::vector<long> counts(static_cast<std::size_t>(k), 0);
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, k);  // sums(i, j) = sum over C_i of a_j
    for (Eigen::Index l = 0; l < n; ++l) {
        const int c = assign.labels[static_cast<std::size_t>(l)];
        if (c < 0 || c >= k) throw InvalidInput("connectivity_matrix: label out of range");
        ++counts[static_cast<std::size_t>(c)];
        sums.row(c) += a.a.row(l);
    }
    for (Eigen::Index i = 0; i < k; ++i) {
        if (counts[static_cast<std::size_t>(i)] == 0) {
            throw EmptyCluster("connectivity_matrix: cluster " + std::to_string(i)
                               + " is empty");
        }
    }

    ConnectivityMatrix cm;
    cm.omega = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i + 1; j < k; ++j) {
            const double value = 0.5 * (sums(i, j) / double(counts[static_cast<std::size_t>(i)])
                                        + sums(j, i) / double(counts[static_cast<std::size_t>(j)]));
            // Both entries take the same double, so symmetry is exact.
            cm.omega(i, j) = value;
            cm.omega(j, i) = value;
        }
    }
    return cm;
}

std::vector<Edge> edge_set(const ConnectivityMatrix& cm, double omega0) {
    if (!(omega0 > 0.0 && omega0 < 1.0)) {
        throw InvalidInput("edge_set: omega0 must lie in (0, 1)");
    }
    std::vector<Edge> edges;
    const Eigen::Index k = cm.k();
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i + 1; j < k; ++j) {
            if (cm.omega(i, j) > omega0) {
                edges.push_back({static_cast<int>(i), static_cast<int>(j), cm.omega(i, j)});
            }
        }
    }
    return edges;
}

}  // namespace modecluster
