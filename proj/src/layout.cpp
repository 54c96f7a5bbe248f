#include "modecluster/layout.hpp"

#include <cmath>

#include "modecluster/numerics.hpp"
#include "modecluster/parallel.hpp"

namespace modecluster {

Eigen::MatrixXd classical_mds(const Eigen::MatrixXd& points, int target_dim) {
    const Eigen::Index m = points.rows();
    if (m < 2) throw InvalidInput("classical_mds: need at least 2 points");
    if (target_dim < 1 || target_dim > m) {
        throw InvalidInput("classical_mds: target dimension out of range");
    }
    if (!points.allFinite()) throw InvalidInput("classical_mds: non-finite input");

    const Eigen::RowVectorXd mean = points.colwise().mean();
    const Eigen::MatrixXd centered = points.rowwise() - mean;
    Eigen::MatrixXd gram = centered * centered.transpose();
    gram = 0.5 * (gram + gram.transpose()).eval();

    const numerics::EigenPairs eig = numerics::sym_eigen(numerics::SymMatrix(gram));
    Eigen::MatrixXd out(m, target_dim);
    for (int c = 0; c < target_dim; ++c) {
        // A negative eigenvalue here is pure roundoff; its column is zero.
        const double scale = std::sqrt(std::max(eig.values[c], 0.0));
        out.col(c) = scale * eig.vectors.col(c);
    }
    return out;
}

LayoutResult two_stage_layout(const ModeSet& modes, const ClusterAssignment& assign,
                              const Eigen::MatrixXd& data, const ConnectivityMatrix& cm,
                              double rho0) {
    const Eigen::Index k = modes.count();
    const Eigen::Index n = data.rows();
    if (k < 1) throw InvalidInput("two_stage_layout: no modes");
    if (static_cast<Eigen::Index>(assign.labels.size()) != n) {
        throw InvalidInput("two_stage_layout: assignment does not match data");
    }
    if (cm.k() != k) throw InvalidInput("two_stage_layout: connectivity size mismatch");
    if (!(rho0 > 0.0)) throw InvalidInput("two_stage_layout: rho0 must be positive");

    LayoutResult res;
    res.rho0 = rho0;
    res.edges = cm.edges;

    // Stage one: MDS on the modes, scaled by rho0.
    if (k == 1) {
        res.mode_xy = Eigen::MatrixXd::Zero(1, 2);
    } else {
        res.mode_xy = rho0 * classical_mds(modes.modes, 2);
    }

    std::vector<std::vector<Eigen::Index>> members(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < n; ++i) {
        const int c = assign.labels[static_cast<std::size_t>(i)];
        if (c < 0 || c >= k) throw InvalidInput("two_stage_layout: label out of range");
        members[static_cast<std::size_t>(c)].push_back(i);
    }
    for (Eigen::Index j = 0; j < k; ++j) {
        if (members[static_cast<std::size_t>(j)].empty()) {
            throw EmptyCluster("two_stage_layout: cluster " + std::to_string(j) + " is empty");
        }
    }

    // Stage two: per-cluster MDS on {mode} u {points}, translated onto the
    // stage-one image of the mode.
    res.point_xy.resize(n, 2);
    parallel_for(static_cast<std::size_t>(k), [&](std::size_t j) {
        const auto& idx = members[j];
        const Eigen::Index jj = static_cast<Eigen::Index>(j);
        if (idx.size() == 1) {
            const double dist = (data.row(idx[0]) - modes.modes.row(jj)).norm();
            res.point_xy.row(idx[0]) = res.mode_xy.row(jj) + Eigen::RowVector2d(dist, 0.0);
            return;
        }
        Eigen::MatrixXd local(static_cast<Eigen::Index>(idx.size()) + 1, data.cols());
        local.row(0) = modes.modes.row(jj);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            local.row(static_cast<Eigen::Index>(r) + 1) = data.row(idx[r]);
        }
        const Eigen::MatrixXd z = classical_mds(local, 2);
        const Eigen::RowVector2d offset = res.mode_xy.row(jj) - z.row(0);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            res.point_xy.row(idx[r]) = z.row(static_cast<Eigen::Index>(r) + 1) + offset;
        }
    });
    return res;
}

}  // namespace modecluster
