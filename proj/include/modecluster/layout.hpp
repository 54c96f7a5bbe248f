#pragma once

#include <vector>

#include <Eigen/Core>

#include "modecluster/connectivity.hpp"
#include "modecluster/meanshift.hpp"

namespace modecluster {

// Two-dimensional coordinates for modes and points plus the connectivity
// edges carried over from the connectivity matrix.
struct LayoutResult {
    Eigen::MatrixXd mode_xy;   // k x 2, after rho0 scaling
    Eigen::MatrixXd point_xy;  // n x 2
    std::vector<Edge> edges;
    double rho0 = 1.0;
};

// Classical multidimensional scaling: eigendecomposition of the centered
// Gram matrix, coordinates from the top target_dim eigenpairs scaled by
// sqrt(eigenvalue). Negative eigenvalues among the kept ones (possible
// only through roundoff) contribute a zero column.
Eigen::MatrixXd classical_mds(const Eigen::MatrixXd& points, int target_dim = 2);

// Two-stage layout: MDS on the modes scaled by rho0, then per-cluster MDS
// on {mode} union {cluster points}, translated so each cluster's mode
// image lands on the stage-one position. A single-point cluster is placed
// at its original distance from the mode along +x.
LayoutResult two_stage_layout(const ModeSet& modes, const ClusterAssignment& assign,
                              const Eigen::MatrixXd& data, const ConnectivityMatrix& cm,
                              double rho0);

}  // namespace modecluster
