#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "modecluster/errors.hpp"

namespace modecluster {

// Cross-tabulation of true classes (rows, ordered by first appearance)
// against cluster indices (columns 0..k-1).
struct ContingencyTable {
    std::vector<std::string> row_names;
    Eigen::MatrixXi counts;  // r x c
    std::vector<int> row_marginals;
    std::vector<int> col_marginals;

    long total() const noexcept;
};

ContingencyTable confusion(const std::vector<std::string>& labels_true,
                           const std::vector<int>& labels_pred);

// Hubert-Arabie adjusted Rand index under the permutation model. Computed
// with exact integer combinatorics and a single final division; pairs of
// identical trivial partitions yield 1.
double adjusted_rand(const std::vector<int>& labels_a, const std::vector<int>& labels_b);

// Convenience overload mapping string labels to ids by first appearance.
double adjusted_rand(const std::vector<std::string>& labels_a,
                     const std::vector<int>& labels_b);

}  // namespace modecluster
