#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "modecluster/errors.hpp"

namespace modecluster {

// Observation matrix with per-column statistics. col_mean/col_sd are the
// statistics of the original (unstandardized) data so standardized
// coordinates can be mapped back.
struct DataMatrix {
    Eigen::MatrixXd x;  // n x d
    Eigen::VectorXd col_mean;
    Eigen::VectorXd col_sd;  // sample standard deviation, divisor n-1
    std::vector<std::string> feature_names;  // empty when the file had no header
    std::vector<std::string> labels;         // optional held-out classes, size n or 0
    std::vector<std::size_t> skipped_rows;   // data-row indices rejected at load
    bool standardized = false;

    Eigen::Index n() const noexcept { return x.rows(); }
    Eigen::Index d() const noexcept { return x.cols(); }
};

// Builds a DataMatrix from an in-memory matrix, computing column
// statistics. Throws on non-finite entries, n < 2, or a constant column.
DataMatrix make_data_matrix(Eigen::MatrixXd x, std::vector<std::string> labels = {});

// Loads a comma-separated file. The first line is treated as a header when
// any of its cells is non-numeric. label_column (requires a header) is
// held out of the feature matrix. Fully non-numeric columns are dropped;
// rows with a non-numeric cell in a feature column are skipped and
// recorded in skipped_rows.
DataMatrix load_csv(const std::string& path, const std::string& label_column = "");

// Z-scores every column. The returned matrix keeps the original
// col_mean/col_sd; applying standardize twice is the identity within
// floating-point roundoff.
DataMatrix standardize(const DataMatrix& dm);

}  // namespace modecluster
