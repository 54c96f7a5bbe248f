#pragma once

#include <Eigen/Core>

#include "modecluster/errors.hpp"

namespace modecluster {

// Gaussian kernel density estimator,
//
//   p(x) = 1/(n h^d) * sum_i K(||x - X_i|| / h),
//   K(u) = (2*pi)^(-d/2) * exp(-u^2 / 2),
//
// with exact evaluation (no tree or grid approximations) and analytic
// gradient. Immutable after construction; evaluations are pure.
class DensityModel {
public:
    DensityModel(Eigen::MatrixXd data, double h);

    double density(const Eigen::VectorXd& x) const;
    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;

    // K(||a - b|| / h); symmetric in its arguments.
    double kernel_weight(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;

    const Eigen::MatrixXd& data() const noexcept { return data_; }
    double h() const noexcept { return h_; }
    Eigen::Index n() const noexcept { return data_.rows(); }
    Eigen::Index d() const noexcept { return data_.cols(); }

    // Squared distances from x to every data point, divided by h^2.
    Eigen::VectorXd scaled_sq_dists(const Eigen::VectorXd& x) const;

private:
    void check_point(const Eigen::VectorXd& x) const;

    Eigen::MatrixXd data_;
    double h_;
    double kernel_norm_;   // (2*pi)^(-d/2)
    double density_norm_;  // kernel_norm_ / (n h^d)
};

}  // namespace modecluster
