#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "modecluster/bandwidth.hpp"
#include "modecluster/connectivity.hpp"
#include "modecluster/dataset.hpp"
#include "modecluster/denoise.hpp"
#include "modecluster/layout.hpp"
#include "modecluster/softassign.hpp"

namespace modecluster {

struct RunConfig {
    std::string input_path;
    std::string label_column;
    bool standardize = true;
    std::optional<double> h;       // overrides take precedence over the rules
    std::optional<double> n0;
    std::optional<double> rho0;
    std::optional<double> omega0;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    int threads = 0;
    std::string color_by = "cluster";  // layout.svg point colors: cluster | label
};

struct RunResult {
    PipelineParams params;  // effective values after overrides
    int k_pre = 0;          // modes before denoising
    int k_post = 0;         // significant modes
    DataMatrix data;
    ModeSet modes;
    ClusterAssignment assign;
    SoftAssignment soft;
    ConnectivityMatrix connectivity;
    LayoutResult layout;
    std::map<std::string, double> timings_ms;
};

// Runs bandwidth selection, mode clustering, denoising, soft assignment,
// connectivity and layout in order, writing labels.json, modes.json,
// soft.csv, omega.csv, edges.json, scplot.csv, scplot.svg, layout.json,
// layout.svg and manifest.json into cfg.out_dir. A failing stage removes
// the partial outputs and rethrows as PipelineError with the stage name.
RunResult run_pipeline(const RunConfig& cfg);

}  // namespace modecluster
