#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "modecluster/connectivity.hpp"
#include "modecluster/layout.hpp"
#include "modecluster/meanshift.hpp"

namespace modecluster {

inline constexpr const char* kVersion = "0.1.0";

// Rounds to `digits` significant decimal digits. JSON artifacts store
// reals at 9 significant digits.
double round_sig(double x, int digits = 9);

// JSON/CSV artifact serialization shared by the pipeline and the CLI
// subcommands. JSON uses UTF-8 and 2-space indentation.
std::string cluster_json(const ModeSet& modes, const ClusterAssignment& assign);
std::string modes_json(const ModeSet& modes);
std::string labels_json(const ClusterAssignment& assign);
std::string edges_json(const std::vector<Edge>& edges);
std::string layout_json(const LayoutResult& layout);
std::string soft_csv(const Eigen::MatrixXd& a);          // 6 decimals
std::string omega_csv(const Eigen::MatrixXd& omega);     // 6 decimals
std::string scplot_csv(const std::vector<int>& sorted_sizes, double n0);

// Parsers for the artifacts consumed by standalone subcommands.
void parse_cluster_json(const std::string& text, ModeSet& modes, ClusterAssignment& assign);
Eigen::MatrixXd parse_matrix_csv(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace modecluster
