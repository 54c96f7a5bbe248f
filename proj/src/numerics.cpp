#include "modecluster/numerics.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace modecluster {
namespace numerics {

SymMatrix::SymMatrix(Eigen::MatrixXd m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw InvalidInput("SymMatrix: matrix must be square and nonempty");
    }
    if (!m.allFinite()) {
        throw InvalidInput("SymMatrix: non-finite entries");
    }
    const double scale = m.cwiseAbs().maxCoeff();
    const double tol = 1e-12 * std::max(scale, 1.0);
    if (((m - m.transpose()).cwiseAbs().maxCoeff()) > tol) {
        throw InvalidInput("SymMatrix: matrix is not symmetric");
    }
    m_ = 0.5 * (m + m.transpose()).eval();
}

namespace {

// Largest-magnitude entry nonnegative; first such entry decides on ties.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
    Eigen::Index best = 0;
    double best_abs = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    if (v[best] < 0.0) v = -v;
}

}  // namespace

EigenPairs sym_eigen(const SymMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.matrix());
    if (solver.info() != Eigen::Success) {
        throw SingularSystem("sym_eigen: eigendecomposition failed to converge");
    }
    const Eigen::Index n = m.order();
    EigenPairs out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    // Eigen returns ascending order.
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values[i] = solver.eigenvalues()[n - 1 - i];
        out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
        fix_sign(out.vectors.col(i));
    }
    return out;
}

Eigen::MatrixXd solve_linear(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw InvalidInput("solve_linear: matrix must be square and nonempty");
    }
    if (b.rows() != a.rows()) {
        throw InvalidInput("solve_linear: right-hand side is not conformable");
    }
    if (!a.allFinite() || !b.allFinite()) {
        throw InvalidInput("solve_linear: non-finite entries");
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-12)) {
        throw SingularSystem("solve_linear: system is singular or ill-conditioned (rcond="
                             + std::to_string(rcond) + ")");
    }
    return lu.solve(b);
}

}  // namespace numerics
}  // namespace modecluster
