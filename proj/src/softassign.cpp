#include "modecluster/softassign.hpp"

#include <cmath>

#include "modecluster/numerics.hpp"
#include "modecluster/parallel.hpp"

namespace modecluster {

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> transition_blocks(const DensityModel& model,
                                                              const ModeSet& modes) {
    const Eigen::Index n = model.n();
    const Eigen::Index k = modes.count();
    if (k < 1) throw InvalidInput("transition_blocks: need at least one mode");
    if (modes.modes.cols() != model.d()) {
        throw InvalidInput("transition_blocks: modes and data dimension mismatch");
    }

    Eigen::MatrixXd S(n, k);
    Eigen::MatrixXd T(n, n);
    const double inv_h2 = 1.0 / (model.h() * model.h());
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t idx) {
        const Eigen::Index i = static_cast<Eigen::Index>(idx);
        const Eigen::VectorXd xi = model.data().row(i);
        const Eigen::ArrayXd t_row =
            (-0.5 * inv_h2 *
             (model.data().rowwise() - xi.transpose()).rowwise().squaredNorm().array())
                .exp();
        const Eigen::ArrayXd s_row =
            (-0.5 * inv_h2 *
             (modes.modes.rowwise() - xi.transpose()).rowwise().squaredNorm().array())
                .exp();
        const double total = t_row.sum() + s_row.sum();  // >= 1 from the self term
        T.row(i) = (t_row / total).matrix().transpose();
        S.row(i) = (s_row / total).matrix().transpose();
    });
    return {std::move(S), std::move(T)};
}

SoftAssignment absorb(const Eigen::MatrixXd& S, const Eigen::MatrixXd& T) {
    const Eigen::Index n = T.rows();
    if (T.cols() != n || S.rows() != n || S.cols() < 1) {
        throw InvalidInput("absorb: block dimensions are inconsistent");
    }
    if (!S.allFinite() || !T.allFinite()) {
        throw InvalidInput("absorb: non-finite transition probabilities");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(S.row(i).sum() > 0.0)) {
            throw InvalidInput("absorb: row " + std::to_string(i)
                               + " has no absorbing mass; T is not substochastic");
        }
    }
    const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - T;
    SoftAssignment out;
    out.a = numerics::solve_linear(lhs, S);
    // Roundoff can leave probabilities marginally outside [0, 1].
    out.a = out.a.cwiseMax(0.0).cwiseMin(1.0);
    return out;
}

SoftAssignment soft_assign(const DensityModel& model, const ModeSet& modes) {
    auto [S, T] = transition_blocks(model, modes);
    return absorb(S, T);
}

}  // namespace modecluster
