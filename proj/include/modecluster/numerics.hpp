#pragma once

#include <Eigen/Core>

#include "modecluster/errors.hpp"

namespace modecluster {
namespace numerics {

// Dense symmetric matrix. Construction validates squareness, finiteness
// and symmetry (within 1e-12 relative to the largest entry); the stored
// matrix is the symmetrized average of the input.
class SymMatrix {
public:
    explicit SymMatrix(Eigen::MatrixXd m);

    const Eigen::MatrixXd& matrix() const noexcept { return m_; }
    Eigen::Index order() const noexcept { return m_.rows(); }

private:
    Eigen::MatrixXd m_;
};

struct EigenPairs {
    Eigen::VectorXd values;   // sorted descending
    Eigen::MatrixXd vectors;  // orthonormal columns, values[i] <-> col(i)
};

// Full spectrum of a symmetric matrix. Eigenvalues descending; each
// eigenvector's largest-magnitude entry (first such entry on ties) is
// made nonnegative so output is reproducible across runs.
EigenPairs sym_eigen(const SymMatrix& m);

// Solves a x = b for square a. Throws SingularSystem when a is singular
// or its estimated condition number exceeds 1e12.
Eigen::MatrixXd solve_linear(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace numerics
}  // namespace modecluster
