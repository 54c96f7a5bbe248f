#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "modecluster/kde.hpp"

namespace modecluster {

struct MeanShiftOptions {
    double tol_scale = 1e-7;   // per-step displacement tolerance, in units of h
    int max_iter = 500;
    double merge_scale = 0.1;  // mode merge radius, in units of h
    int threads = 0;           // 0 = auto

    double tol(double h) const noexcept { return tol_scale * h; }
    double merge_radius(double h) const noexcept { return merge_scale * h; }
};

// Estimated density modes, one row per mode, ordered by descending
// cluster size (ties by first occurrence in data order).
struct ModeSet {
    Eigen::MatrixXd modes;  // k x d

    Eigen::Index count() const noexcept { return modes.rows(); }
};

struct ClusterAssignment {
    std::vector<int> labels;          // n, mode index per point
    Eigen::MatrixXd destinations;     // n x d converged points
    std::vector<int> sizes;           // k, members per mode
    std::vector<int> nonconverged;    // diagnostics: points whose ascent hit max_iter
    bool force_assigned = false;      // denoise fell back to nearest-mode assignment

    Eigen::Index n() const noexcept { return destinations.rows(); }
};

// Gaussian mean-shift iteration from x0: x <- sum_i w_i X_i / sum_i w_i
// with w_i = K(||x - X_i||/h), run until the step length drops below
// tol(h). Throws NonConvergence (carrying the last iterate) after
// max_iter steps.
Eigen::VectorXd ascend(const DensityModel& model, const Eigen::VectorXd& x0,
                       const MeanShiftOptions& opts = {});

// Ascends every data point, merges converged points within the merge
// radius by single linkage, and labels each point by its merged
// destination. Points that fail to converge are assigned to the mode
// nearest their last iterate and listed in `nonconverged`.
std::pair<ModeSet, ClusterAssignment> cluster(const DensityModel& model,
                                              const MeanShiftOptions& opts = {});

// As cluster(), but ascends the rows of `query` under `model` instead of
// the model's own data. Used by the denoising loop to re-assign all
// points under a reduced-dataset density.
std::pair<ModeSet, ClusterAssignment> cluster_points(const DensityModel& model,
                                                     const Eigen::MatrixXd& query,
                                                     const MeanShiftOptions& opts = {});

}  // namespace modecluster
