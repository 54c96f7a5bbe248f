#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "modecluster/artifacts.hpp"
#include "modecluster/bandwidth.hpp"
#include "modecluster/connectivity.hpp"
#include "modecluster/dataset.hpp"
#include "modecluster/denoise.hpp"
#include "modecluster/evaluation.hpp"
#include "modecluster/kde.hpp"
#include "modecluster/layout.hpp"
#include "modecluster/meanshift.hpp"
#include "modecluster/pipeline.hpp"
#include "modecluster/softassign.hpp"
#include "modecluster/svg.hpp"
#include "modecluster/synth.hpp"

namespace mc = modecluster;

namespace {

struct InputOpts {
    std::string path;
    std::string label_col;
    bool no_standardize = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", path, "input CSV file")->required();
        cmd->add_option("--label-col", label_col, "name of the held-out label column");
        cmd->add_flag("--no-standardize", no_standardize, "skip per-column z-scoring");
    }

    mc::DataMatrix load() const {
        mc::DataMatrix dm = mc::load_csv(path, label_col);
        for (std::size_t row : dm.skipped_rows) {
            std::cerr << "warning: skipped non-numeric data row " << row << "\n";
        }
        return no_standardize ? dm : mc::standardize(dm);
    }
};

double pick_h(const std::optional<double>& override_h, const mc::DataMatrix& dm,
              bool standardized) {
    if (override_h) return *override_h;
    return mc::normal_reference_h(dm.n(), static_cast<int>(dm.d()),
                                  standardized ? 1.0 : dm.col_sd.mean());
}

void print_confusion(const mc::ContingencyTable& table) {
    std::size_t name_w = 5;
    for (const auto& r : table.row_names) name_w = std::max(name_w, r.size());
    std::printf("%-*s", static_cast<int>(name_w + 2), "class");
    for (int j = 0; j < table.counts.cols(); ++j) std::printf("%8d", j);
    std::printf("\n");
    for (int i = 0; i < table.counts.rows(); ++i) {
        std::printf("%-*s", static_cast<int>(name_w + 2),
                    table.row_names[static_cast<std::size_t>(i)].c_str());
        for (int j = 0; j < table.counts.cols(); ++j) std::printf("%8d", table.counts(i, j));
        std::printf("\n");
    }
}

std::string confusion_csv(const mc::ContingencyTable& table) {
    std::string out = "class";
    for (int j = 0; j < table.counts.cols(); ++j) out += "," + std::to_string(j);
    out += "\n";
    for (int i = 0; i < table.counts.rows(); ++i) {
        out += table.row_names[static_cast<std::size_t>(i)];
        for (int j = 0; j < table.counts.cols(); ++j) {
            out += "," + std::to_string(table.counts(i, j));
        }
        out += "\n";
    }
    return out;
}

std::string synth_csv(const mc::DataMatrix& dm) {
    std::string out;
    char buf[64];
    for (Eigen::Index j = 0; j < dm.d(); ++j) {
        out += "x" + std::to_string(j + 1) + ",";
    }
    out += "label\n";
    for (Eigen::Index i = 0; i < dm.n(); ++i) {
        for (Eigen::Index j = 0; j < dm.d(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g,", dm.x(i, j));
            out += buf;
        }
        out += dm.labels.empty() ? "" : dm.labels[static_cast<std::size_t>(i)];
        out += "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mode clustering: mean-shift clustering with soft assignment,\n"
                 "cluster connectivity and two-stage MDS visualization"};
    app.require_subcommand(1);
    // --h is a pipeline parameter, so help stays on --help only.
    app.set_help_flag("--help", "print help and exit");
    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap (0 = auto)")
        ->envname("MODECLUSTER_THREADS");

    // --- run ---------------------------------------------------------------
    auto* run_cmd = app.add_subcommand("run", "run the full pipeline and write all artifacts");
    run_cmd->set_help_flag("--help", "print help and exit");
    InputOpts run_in;
    run_in.attach(run_cmd);
    std::optional<double> run_h, run_n0, run_rho0, run_omega0;
    std::string run_out = ".";
    std::string run_color = "cluster";
    std::uint64_t run_seed = 0;
    run_cmd->add_option("--h", run_h, "bandwidth override");
    run_cmd->add_option("--n0", run_n0, "denoising threshold override");
    run_cmd->add_option("--rho0", run_rho0, "mode-layout scale override");
    run_cmd->add_option("--omega0", run_omega0, "connectivity edge threshold override");
    run_cmd->add_option("--out", run_out, "output directory");
    run_cmd->add_option("--seed", run_seed, "seed recorded in the manifest");
    run_cmd->add_option("--color-by", run_color, "layout point colors: cluster | label")
        ->check(CLI::IsMember({"cluster", "label"}));

    // --- cluster -----------------------------------------------------------
    auto* cluster_cmd = app.add_subcommand("cluster", "mean-shift mode clustering");
    cluster_cmd->set_help_flag("--help", "print help and exit");
    InputOpts cluster_in;
    cluster_in.attach(cluster_cmd);
    std::optional<double> cluster_h, cluster_n0;
    bool cluster_denoise = false;
    std::string cluster_out = "cluster.json";
    cluster_cmd->add_option("--h", cluster_h, "bandwidth override");
    cluster_cmd->add_flag("--denoise", cluster_denoise, "merge insignificant clusters");
    cluster_cmd->add_option("--n0", cluster_n0, "denoising threshold override");
    cluster_cmd->add_option("-o,--out", cluster_out, "output JSON path");

    // --- scplot ------------------------------------------------------------
    auto* scplot_cmd = app.add_subcommand("scplot", "size-of-cluster plot from a clustering");
    scplot_cmd->set_help_flag("--help", "print help and exit");
    std::string scplot_clusters = "cluster.json";
    std::optional<double> scplot_n0;
    std::string scplot_csv_path = "scplot.csv", scplot_svg_path = "scplot.svg";
    scplot_cmd->add_option("--clusters", scplot_clusters, "cluster JSON from `cluster`");
    scplot_cmd->add_option("--n0", scplot_n0, "threshold override");
    scplot_cmd->add_option("--csv", scplot_csv_path, "output CSV path");
    scplot_cmd->add_option("--svg", scplot_svg_path, "output SVG path");

    // --- soft --------------------------------------------------------------
    auto* soft_cmd = app.add_subcommand("soft", "absorbing-chain soft assignment");
    soft_cmd->set_help_flag("--help", "print help and exit");
    InputOpts soft_in;
    soft_in.attach(soft_cmd);
    std::optional<double> soft_h;
    std::string soft_clusters = "cluster.json", soft_out = "soft.csv";
    soft_cmd->add_option("--h", soft_h, "bandwidth override (must match the clustering)");
    soft_cmd->add_option("--clusters", soft_clusters, "cluster JSON from `cluster`");
    soft_cmd->add_option("-o,--out", soft_out, "output CSV path");

    // --- connect -----------------------------------------------------------
    auto* connect_cmd = app.add_subcommand("connect", "cluster connectivity matrix and edges");
    connect_cmd->set_help_flag("--help", "print help and exit");
    std::string connect_soft = "soft.csv", connect_clusters = "cluster.json";
    std::optional<double> connect_omega0;
    std::string connect_csv = "omega.csv", connect_edges = "edges.json";
    connect_cmd->add_option("--soft", connect_soft, "soft assignment CSV from `soft`");
    connect_cmd->add_option("--clusters", connect_clusters, "cluster JSON from `cluster`");
    connect_cmd->add_option("--omega0", connect_omega0, "edge threshold override");
    connect_cmd->add_option("--csv", connect_csv, "connectivity matrix output path");
    connect_cmd->add_option("--edges", connect_edges, "edge list JSON output path");

    // --- viz ---------------------------------------------------------------
    auto* viz_cmd = app.add_subcommand("viz", "two-stage MDS visualization");
    viz_cmd->set_help_flag("--help", "print help and exit");
    InputOpts viz_in;
    viz_in.attach(viz_cmd);
    std::string viz_clusters = "cluster.json", viz_omega = "omega.csv";
    std::optional<double> viz_rho0, viz_omega0;
    std::string viz_color = "cluster";
    std::string viz_svg = "layout.svg", viz_json = "layout.json";
    viz_cmd->add_option("--clusters", viz_clusters, "cluster JSON from `cluster`");
    viz_cmd->add_option("--omega", viz_omega, "connectivity matrix CSV from `connect`");
    viz_cmd->add_option("--rho0", viz_rho0, "mode-layout scale");
    viz_cmd->add_option("--omega0", viz_omega0, "edge threshold");
    viz_cmd->add_option("--color-by", viz_color, "point colors: cluster | label")
        ->check(CLI::IsMember({"cluster", "label"}));
    viz_cmd->add_option("--svg", viz_svg, "output SVG path");
    viz_cmd->add_option("--json", viz_json, "output JSON path");

    // --- eval --------------------------------------------------------------
    auto* eval_cmd = app.add_subcommand("eval", "confusion matrix and adjusted Rand index");
    eval_cmd->set_help_flag("--help", "print help and exit");
    InputOpts eval_in;
    eval_in.attach(eval_cmd);
    std::string eval_clusters = "cluster.json";
    std::string eval_csv;
    eval_cmd->add_option("--clusters", eval_clusters, "cluster JSON from `cluster`");
    eval_cmd->add_option("--csv", eval_csv, "also write the table as CSV");

    // --- synth -------------------------------------------------------------
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic benchmark dataset");
    synth_cmd->set_help_flag("--help", "print help and exit");
    std::string synth_which = "five_cluster_10d";
    std::uint64_t synth_seed = 0;
    int synth_n = 500;
    std::string synth_out = "synth.csv";
    synth_cmd
        ->add_option("--which", synth_which, "five_cluster_10d | four_gaussian_8d | two_gaussian_1d")
        ->check(CLI::IsMember({"five_cluster_10d", "four_gaussian_8d", "two_gaussian_1d"}));
    synth_cmd->add_option("--seed", synth_seed, "RNG seed");
    synth_cmd->add_option("--n", synth_n, "sample size (two_gaussian_1d only)");
    synth_cmd->add_option("-o,--out", synth_out, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        mc::MeanShiftOptions ms_opts;
        ms_opts.threads = threads;

        if (*run_cmd) {
            mc::RunConfig cfg;
            cfg.input_path = run_in.path;
            cfg.label_column = run_in.label_col;
            cfg.standardize = !run_in.no_standardize;
            cfg.h = run_h;
            cfg.n0 = run_n0;
            cfg.rho0 = run_rho0;
            cfg.omega0 = run_omega0;
            cfg.out_dir = run_out;
            cfg.seed = run_seed;
            cfg.threads = threads;
            cfg.color_by = run_color;
            const mc::RunResult res = mc::run_pipeline(cfg);
            std::printf("n=%ld d=%ld h=%.6g n0=%.6g omega0=%.6g rho0=%.6g\n",
                        static_cast<long>(res.data.n()), static_cast<long>(res.data.d()),
                        res.params.h, res.params.n0, res.params.omega0, res.params.rho0);
            std::printf("clusters: %d before denoising, %d significant\n", res.k_pre,
                        res.k_post);
            std::printf("artifacts written to %s\n", run_out.c_str());
        } else if (*cluster_cmd) {
            const mc::DataMatrix dm = cluster_in.load();
            const double h = pick_h(cluster_h, dm, !cluster_in.no_standardize);
            const mc::DensityModel model(dm.x, h);
            auto [modes, assign] = mc::cluster(model, ms_opts);
            if (cluster_denoise) {
                const double n0 = cluster_n0.value_or(
                    mc::denoise_threshold(dm.n(), static_cast<int>(dm.d())));
                std::tie(modes, assign) = mc::denoise(model, modes, assign, n0, ms_opts);
            }
            mc::write_file(cluster_out, mc::cluster_json(modes, assign));
            std::printf("h=%.6g k=%ld -> %s\n", h, static_cast<long>(modes.count()),
                        cluster_out.c_str());
        } else if (*scplot_cmd) {
            mc::ModeSet modes;
            mc::ClusterAssignment assign;
            mc::parse_cluster_json(mc::read_file(scplot_clusters), modes, assign);
            const long n = static_cast<long>(assign.labels.size());
            const double n0 = scplot_n0.value_or(
                mc::denoise_threshold(n, static_cast<int>(modes.modes.cols())));
            const mc::SCPlotData sc = mc::sc_plot(assign, n0);
            mc::write_file(scplot_csv_path, mc::scplot_csv(sc.sorted_sizes, sc.threshold));
            mc::write_file(scplot_svg_path, mc::scplot_svg(sc));
            std::printf("%zu clusters, n0=%.6g -> %s, %s\n", sc.sorted_sizes.size(), n0,
                        scplot_csv_path.c_str(), scplot_svg_path.c_str());
        } else if (*soft_cmd) {
            const mc::DataMatrix dm = soft_in.load();
            mc::ModeSet modes;
            mc::ClusterAssignment assign;
            mc::parse_cluster_json(mc::read_file(soft_clusters), modes, assign);
            const double h = pick_h(soft_h, dm, !soft_in.no_standardize);
            const mc::DensityModel model(dm.x, h);
            const mc::SoftAssignment soft = mc::soft_assign(model, modes);
            mc::write_file(soft_out, mc::soft_csv(soft.a));
            std::printf("soft assignment %ldx%ld -> %s\n", static_cast<long>(soft.n()),
                        static_cast<long>(soft.k()), soft_out.c_str());
        } else if (*connect_cmd) {
            mc::ModeSet modes;
            mc::ClusterAssignment assign;
            mc::parse_cluster_json(mc::read_file(connect_clusters), modes, assign);
            mc::SoftAssignment soft;
            soft.a = mc::parse_matrix_csv(mc::read_file(connect_soft));
            const double omega0 = connect_omega0.value_or(
                mc::default_omega0(static_cast<int>(modes.count())));
            mc::ConnectivityMatrix cm = mc::connectivity_matrix(soft, assign);
            cm.edges = mc::edge_set(cm, omega0);
            mc::write_file(connect_csv, mc::omega_csv(cm.omega));
            mc::write_file(connect_edges, mc::edges_json(cm.edges));
            std::printf("omega0=%.6g, %zu edges -> %s, %s\n", omega0, cm.edges.size(),
                        connect_csv.c_str(), connect_edges.c_str());
        } else if (*viz_cmd) {
            const mc::DataMatrix dm = viz_in.load();
            mc::ModeSet modes;
            mc::ClusterAssignment assign;
            mc::parse_cluster_json(mc::read_file(viz_clusters), modes, assign);
            mc::ConnectivityMatrix cm;
            cm.omega = mc::parse_matrix_csv(mc::read_file(viz_omega));
            const double omega0 =
                viz_omega0.value_or(mc::default_omega0(static_cast<int>(modes.count())));
            cm.edges = mc::edge_set(cm, omega0);
            const double rho0 = viz_rho0.value_or(5.0);
            const mc::LayoutResult layout =
                mc::two_stage_layout(modes, assign, dm.x, cm, rho0);
            mc::write_file(viz_json, mc::layout_json(layout));
            mc::write_file(viz_svg,
                           mc::layout_svg(layout, assign.labels,
                                          viz_color == "label" ? dm.labels
                                                               : std::vector<std::string>{}));
            std::printf("layout with %zu edges -> %s, %s\n", layout.edges.size(),
                        viz_svg.c_str(), viz_json.c_str());
        } else if (*eval_cmd) {
            const mc::DataMatrix dm = eval_in.load();
            if (dm.labels.empty()) {
                throw mc::InvalidInput("eval requires --label-col with a labeled dataset");
            }
            mc::ModeSet modes;
            mc::ClusterAssignment assign;
            mc::parse_cluster_json(mc::read_file(eval_clusters), modes, assign);
            if (assign.labels.size() != dm.labels.size()) {
                throw mc::InvalidInput("eval: clustering and dataset sizes differ");
            }
            const mc::ContingencyTable table = mc::confusion(dm.labels, assign.labels);
            print_confusion(table);
            std::printf("adjusted Rand index: %.3f\n",
                        mc::adjusted_rand(dm.labels, assign.labels));
            if (!eval_csv.empty()) mc::write_file(eval_csv, confusion_csv(table));
        } else if (*synth_cmd) {
            mc::DataMatrix dm;
            if (synth_which == "five_cluster_10d") {
                dm = mc::gen_five_cluster(synth_seed);
            } else if (synth_which == "four_gaussian_8d") {
                dm = mc::gen_four_gaussian_8d(synth_seed);
            } else {
                dm = mc::gen_two_gaussian_1d(synth_seed, synth_n);
            }
            mc::write_file(synth_out, synth_csv(dm));
            std::printf("%s seed=%llu: n=%ld d=%ld -> %s\n", synth_which.c_str(),
                        static_cast<unsigned long long>(synth_seed),
                        static_cast<long>(dm.n()), static_cast<long>(dm.d()),
                        synth_out.c_str());
        }
    } catch (const mc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
