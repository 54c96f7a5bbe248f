#pragma once

#include <utility>

#include <Eigen/Core>

#include "modecluster/kde.hpp"
#include "modecluster/meanshift.hpp"

namespace modecluster {

// Row-stochastic matrix of absorbing probabilities: a(i, j) is the
// probability that the kernel-weighted random walk started at X_i is
// absorbed at mode j.
struct SoftAssignment {
    Eigen::MatrixXd a;  // n x k

    Eigen::Index n() const noexcept { return a.rows(); }
    Eigen::Index k() const noexcept { return a.cols(); }
};

// Blocks of the absorbing-chain transition matrix. With
// D_i = sum_j K_h(X_i, X_j) + sum_l K_h(X_i, m_l)  (self term included),
//   S(i, l) = K_h(X_i, m_l) / D_i      (n x k, jumps to absorbing modes)
//   T(i, j) = K_h(X_i, X_j) / D_i      (n x n, jumps between points)
// so each row of [S | T] sums to one.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> transition_blocks(const DensityModel& model,
                                                              const ModeSet& modes);

// Absorbing probabilities A = (I - T)^{-1} S, solved column-by-column.
SoftAssignment absorb(const Eigen::MatrixXd& S, const Eigen::MatrixXd& T);

SoftAssignment soft_assign(const DensityModel& model, const ModeSet& modes);

}  // namespace modecluster
