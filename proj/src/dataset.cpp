#include "modecluster/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace modecluster {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

void compute_stats(DataMatrix& dm) {
    const Eigen::Index n = dm.n();
    const Eigen::Index d = dm.d();
    dm.col_mean = dm.x.colwise().mean();
    dm.col_sd.resize(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const double var =
            (dm.x.col(j).array() - dm.col_mean[j]).square().sum() / double(n - 1);
        dm.col_sd[j] = std::sqrt(var);
    }
}

std::string column_name(const DataMatrix& dm, Eigen::Index j) {
    if (j < static_cast<Eigen::Index>(dm.feature_names.size())) return dm.feature_names[j];
    return "#" + std::to_string(j);
}

}  // namespace

DataMatrix make_data_matrix(Eigen::MatrixXd x, std::vector<std::string> labels) {
    if (x.rows() < 2 || x.cols() < 1) {
        throw EmptyDataset("dataset must have at least 2 rows and 1 column");
    }
    if (!x.allFinite()) {
        throw InvalidInput("dataset contains non-finite entries");
    }
    if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != x.rows()) {
        throw InvalidInput("label count does not match row count");
    }
    DataMatrix dm;
    dm.x = std::move(x);
    dm.labels = std::move(labels);
    compute_stats(dm);
    for (Eigen::Index j = 0; j < dm.d(); ++j) {
        if (!(dm.col_sd[j] > 0.0)) {
            throw DegenerateColumn("column " + column_name(dm, j) + " is constant");
        }
    }
    return dm;
}

DataMatrix load_csv(const std::string& path, const std::string& label_column) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        rows.push_back(split_csv_line(line));
    }
    if (in.bad()) throw IoError("read failure on " + path);
    if (rows.empty()) throw EmptyDataset(path + ": no rows");

    const std::size_t ncols = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != ncols) {
            throw InvalidInput(path + ": inconsistent column count");
        }
    }

    // Header iff any first-line cell is non-numeric.
    double tmp;
    const bool has_header =
        std::any_of(rows[0].begin(), rows[0].end(),
                    [&](const std::string& c) { return !parse_double(c, tmp); });
    std::vector<std::string> header;
    if (has_header) {
        header = rows[0];
        rows.erase(rows.begin());
        if (rows.empty()) throw EmptyDataset(path + ": header only, no data rows");
    }

    long label_idx = -1;
    if (!label_column.empty()) {
        if (!has_header) {
            throw InvalidInput(path + ": label column requires a header line");
        }
        const auto it = std::find(header.begin(), header.end(), label_column);
        if (it == header.end()) {
            throw InvalidInput(path + ": no column named '" + label_column + "'");
        }
        label_idx = it - header.begin();
    }

    // A column is a feature iff at least one cell parses as a number;
    // fully non-numeric columns are dropped.
    std::vector<std::size_t> feature_cols;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (static_cast<long>(j) == label_idx) continue;
        const bool numeric = std::any_of(rows.begin(), rows.end(),
                                         [&](const auto& r) { return parse_double(r[j], tmp); });
        if (numeric) feature_cols.push_back(j);
    }
    if (feature_cols.empty()) throw EmptyDataset(path + ": no numeric feature columns");

    DataMatrix dm;
    std::vector<std::vector<double>> values;
    values.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<double> rec(feature_cols.size());
        bool ok = true;
        for (std::size_t c = 0; c < feature_cols.size(); ++c) {
            if (!parse_double(rows[i][feature_cols[c]], rec[c])) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            dm.skipped_rows.push_back(i);
            continue;
        }
        values.push_back(std::move(rec));
        if (label_idx >= 0) dm.labels.push_back(rows[i][label_idx]);
    }
    if (values.size() < 2) throw EmptyDataset(path + ": fewer than 2 usable rows");

    dm.x.resize(static_cast<Eigen::Index>(values.size()),
                static_cast<Eigen::Index>(feature_cols.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t c = 0; c < feature_cols.size(); ++c) {
            dm.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = values[i][c];
        }
    }
    if (has_header) {
        for (std::size_t j : feature_cols) dm.feature_names.push_back(header[j]);
    }

    compute_stats(dm);
    for (Eigen::Index j = 0; j < dm.d(); ++j) {
        if (!(dm.col_sd[j] > 0.0)) {
            throw DegenerateColumn(path + ": column " + column_name(dm, j) + " is constant");
        }
    }
    return dm;
}

DataMatrix standardize(const DataMatrix& dm) {
    const Eigen::Index n = dm.n();
    const Eigen::Index d = dm.d();
    Eigen::VectorXd cur_mean = dm.x.colwise().mean();
    Eigen::VectorXd cur_sd(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const double var =
            (dm.x.col(j).array() - cur_mean[j]).square().sum() / double(n - 1);
        cur_sd[j] = std::sqrt(var);
        if (!(cur_sd[j] > 0.0)) {
            throw DegenerateColumn("column " + column_name(dm, j) + " has zero variance");
        }
    }

    DataMatrix out = dm;
    for (Eigen::Index j = 0; j < d; ++j) {
        out.x.col(j) = (dm.x.col(j).array() - cur_mean[j]) / cur_sd[j];
    }
    if (!dm.standardized) {
        // Keep the original statistics for the inverse mapping.
        out.col_mean = cur_mean;
        out.col_sd = cur_sd;
    }
    out.standardized = true;
    return out;
}

}  // namespace modecluster
