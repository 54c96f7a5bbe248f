#include "modecluster/artifacts.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "modecluster/errors.hpp"

namespace modecluster {

using nlohmann::json;

double round_sig(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double mag = std::floor(std::log10(std::abs(x)));
    const double scale = std::pow(10.0, digits - 1 - mag);
    return std::round(x * scale) / scale;
}

namespace {

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(round_sig(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json edges_to_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) {
        arr.push_back(json{{"i", e.i}, {"j", e.j}, {"weight", round_sig(e.weight)}});
    }
    return arr;
}

std::string format_fixed6(const Eigen::MatrixXd& m) {
    std::string out;
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.6f", m(i, j));
            if (j) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string cluster_json(const ModeSet& modes, const ClusterAssignment& assign) {
    json doc;
    doc["modes"] = matrix_to_json(modes.modes);
    doc["labels"] = assign.labels;
    doc["sizes"] = assign.sizes;
    if (!assign.nonconverged.empty()) doc["nonconverged"] = assign.nonconverged;
    if (assign.force_assigned) doc["force_assigned"] = true;
    return doc.dump(2) + "\n";
}

std::string modes_json(const ModeSet& modes) {
    json doc;
    doc["modes"] = matrix_to_json(modes.modes);
    return doc.dump(2) + "\n";
}

std::string labels_json(const ClusterAssignment& assign) {
    json doc;
    doc["labels"] = assign.labels;
    doc["sizes"] = assign.sizes;
    if (!assign.nonconverged.empty()) doc["nonconverged"] = assign.nonconverged;
    if (assign.force_assigned) doc["force_assigned"] = true;
    return doc.dump(2) + "\n";
}

std::string edges_json(const std::vector<Edge>& edges) {
    return edges_to_json(edges).dump(2) + "\n";
}

std::string layout_json(const LayoutResult& layout) {
    json doc;
    doc["mode_xy"] = matrix_to_json(layout.mode_xy);
    doc["point_xy"] = matrix_to_json(layout.point_xy);
    doc["edges"] = edges_to_json(layout.edges);
    doc["rho0"] = round_sig(layout.rho0);
    return doc.dump(2) + "\n";
}

std::string soft_csv(const Eigen::MatrixXd& a) { return format_fixed6(a); }

std::string omega_csv(const Eigen::MatrixXd& omega) { return format_fixed6(omega); }

std::string scplot_csv(const std::vector<int>& sorted_sizes, double n0) {
    std::ostringstream out;
    out << "rank,size,threshold\n";
    for (std::size_t i = 0; i < sorted_sizes.size(); ++i) {
        out << (i + 1) << ',' << sorted_sizes[i] << ',' << round_sig(n0) << '\n';
    }
    return out.str();
}

void parse_cluster_json(const std::string& text, ModeSet& modes, ClusterAssignment& assign) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("cluster JSON parse error: ") + e.what());
    }
    if (!doc.contains("modes") || !doc.contains("labels") || !doc.contains("sizes")) {
        throw InvalidInput("cluster JSON must contain modes, labels and sizes");
    }
    const auto& jm = doc["modes"];
    const Eigen::Index k = static_cast<Eigen::Index>(jm.size());
    if (k == 0) throw InvalidInput("cluster JSON: empty mode list");
    const Eigen::Index d = static_cast<Eigen::Index>(jm[0].size());
    modes.modes.resize(k, d);
    for (Eigen::Index i = 0; i < k; ++i) {
        if (static_cast<Eigen::Index>(jm[i].size()) != d) {
            throw InvalidInput("cluster JSON: ragged mode matrix");
        }
        for (Eigen::Index j = 0; j < d; ++j) modes.modes(i, j) = jm[i][j].get<double>();
    }
    assign.labels = doc["labels"].get<std::vector<int>>();
    assign.sizes = doc["sizes"].get<std::vector<int>>();
    if (doc.contains("nonconverged")) {
        assign.nonconverged = doc["nonconverged"].get<std::vector<int>>();
    }
    assign.force_assigned = doc.value("force_assigned", false);
    assign.destinations.resize(0, d);
}

Eigen::MatrixXd parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw InvalidInput("matrix CSV: non-numeric cell '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidInput("matrix CSV: empty");
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw InvalidInput("matrix CSV: ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("write failure on " + path);
}

}  // namespace modecluster
