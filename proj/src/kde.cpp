#include "modecluster/kde.hpp"

#include <cmath>

namespace modecluster {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

DensityModel::DensityModel(Eigen::MatrixXd data, double h) : data_(std::move(data)), h_(h) {
    if (data_.rows() < 1 || data_.cols() < 1) {
        throw InvalidInput("DensityModel: empty data");
    }
    if (!data_.allFinite()) {
        throw InvalidInput("DensityModel: non-finite data");
    }
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw InvalidInput("DensityModel: bandwidth must be positive");
    }
    const double d = static_cast<double>(data_.cols());
    kernel_norm_ = std::pow(kTwoPi, -0.5 * d);
    density_norm_ = kernel_norm_ / (static_cast<double>(data_.rows()) * std::pow(h_, d));
}

void DensityModel::check_point(const Eigen::VectorXd& x) const {
    if (x.size() != data_.cols()) {
        throw InvalidInput("evaluation point has wrong dimension");
    }
    if (!x.allFinite()) {
        throw InvalidInput("evaluation point has non-finite entries");
    }
}

Eigen::VectorXd DensityModel::scaled_sq_dists(const Eigen::VectorXd& x) const {
    return (data_.rowwise() - x.transpose()).rowwise().squaredNorm() / (h_ * h_);
}

double DensityModel::density(const Eigen::VectorXd& x) const {
    check_point(x);
    const Eigen::VectorXd u2 = scaled_sq_dists(x);
    return density_norm_ * (-0.5 * u2.array()).exp().sum();
}

Eigen::VectorXd DensityModel::gradient(const Eigen::VectorXd& x) const {
    check_point(x);
    const Eigen::VectorXd u2 = scaled_sq_dists(x);
    const Eigen::VectorXd w = (-0.5 * u2.array()).exp();
    // d/dx of density_norm * sum exp(-||x - X_i||^2 / (2 h^2)).
    Eigen::VectorXd g = data_.transpose() * w - w.sum() * x;
    return (density_norm_ / (h_ * h_)) * g;
}

double DensityModel::kernel_weight(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
    if (a.size() != b.size()) {
        throw InvalidInput("kernel_weight: size mismatch");
    }
    if (!a.allFinite() || !b.allFinite()) {
        throw InvalidInput("kernel_weight: non-finite input");
    }
    const double u2 = (a - b).squaredNorm() / (h_ * h_);
    return kernel_norm_ * std::exp(-0.5 * u2);
}

}  // namespace modecluster
