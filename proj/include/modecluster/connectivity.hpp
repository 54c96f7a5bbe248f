#pragma once

#include <vector>

#include <Eigen/Core>

#include "modecluster/meanshift.hpp"
#include "modecluster/softassign.hpp"

namespace modecluster {

struct Edge {
    int i = 0;  // i < j, 0-based cluster indices
    int j = 0;
    double weight = 0.0;
};

// Symmetric cluster-connectivity matrix. The diagonal is defined as 0.
struct ConnectivityMatrix {
    Eigen::MatrixXd omega;    // k x k
    std::vector<Edge> edges;  // pairs with omega > omega0, filled by edge_set

    Eigen::Index k() const noexcept { return omega.rows(); }
};

// Estimates the connectivity of clusters i and j as the symmetrized mean
// cross-cluster soft-assignment mass:
//   omega(i, j) = ( mean of a_j over cluster i + mean of a_i over cluster j ) / 2.
ConnectivityMatrix connectivity_matrix(const SoftAssignment& a,
                                       const ClusterAssignment& assign);

// Pairs (i < j) with connectivity strictly greater than omega0.
std::vector<Edge> edge_set(const ConnectivityMatrix& cm, double omega0);

}  // namespace modecluster
