#include "modecluster/pipeline.hpp"

#include <chrono>
#include <filesystem>

#include <json.hpp>

#include "modecluster/artifacts.hpp"
#include "modecluster/svg.hpp"

namespace modecluster {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class ArtifactWriter {
public:
    explicit ArtifactWriter(const fs::path& dir) : dir_(dir) {}

    void write(const std::string& name, const std::string& content) {
        write_file((dir_ / name).string(), content);
        written_.push_back(dir_ / name);
    }

    void remove_all_written() {
        std::error_code ec;
        for (const auto& p : written_) fs::remove(p, ec);
        written_.clear();
    }

private:
    fs::path dir_;
    std::vector<fs::path> written_;
};

template <typename F>
auto stage(RunResult& result, const std::string& name, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            result.timings_ms[name] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
        } else {
            auto value = f();
            result.timings_ms[name] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            return value;
        }
    } catch (const Error& e) {
        throw PipelineError(name, e.what(), e.exit_code());
    }
}

}  // namespace

RunResult run_pipeline(const RunConfig& cfg) {
    RunResult result;
    fs::path out_dir(cfg.out_dir.empty() ? "." : cfg.out_dir);
    {
        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (ec) throw IoError("cannot create output directory " + out_dir.string());
    }
    ArtifactWriter writer(out_dir);

    MeanShiftOptions ms_opts;
    ms_opts.threads = cfg.threads;

    try {
        result.data = stage(result, "load", [&] {
            DataMatrix dm = load_csv(cfg.input_path, cfg.label_column);
            return cfg.standardize ? standardize(dm) : dm;
        });

        stage(result, "bandwidth", [&] {
            result.params.h = cfg.h.value_or(
                normal_reference_h(result.data.n(), static_cast<int>(result.data.d()),
                                   cfg.standardize ? 1.0 : result.data.col_sd.mean()));
            result.params.n0 = cfg.n0.value_or(
                denoise_threshold(result.data.n(), static_cast<int>(result.data.d())));
            result.params.rho0 = cfg.rho0.value_or(5.0);
        });

        DensityModel model(result.data.x, result.params.h);

        ClusterAssignment pre_assign;
        ModeSet pre_modes;
        stage(result, "cluster", [&] {
            std::tie(pre_modes, pre_assign) = cluster(model, ms_opts);
            result.k_pre = static_cast<int>(pre_modes.count());
        });

        SCPlotData sc;
        stage(result, "scplot", [&] {
            sc = sc_plot(pre_assign, result.params.n0);
            writer.write("scplot.csv", scplot_csv(sc.sorted_sizes, sc.threshold));
            writer.write("scplot.svg", scplot_svg(sc));
        });

        stage(result, "denoise", [&] {
            std::tie(result.modes, result.assign) =
                denoise(model, pre_modes, pre_assign, result.params.n0, ms_opts);
            result.k_post = static_cast<int>(result.modes.count());
            result.params.omega0 = cfg.omega0.value_or(default_omega0(result.k_post));
            result.params.validate();
            writer.write("modes.json", modes_json(result.modes));
            writer.write("labels.json", labels_json(result.assign));
        });

        stage(result, "soft", [&] {
            result.soft = soft_assign(model, result.modes);
            writer.write("soft.csv", soft_csv(result.soft.a));
        });

        stage(result, "connectivity", [&] {
            result.connectivity = connectivity_matrix(result.soft, result.assign);
            result.connectivity.edges = edge_set(result.connectivity, result.params.omega0);
            writer.write("omega.csv", omega_csv(result.connectivity.omega));
            writer.write("edges.json", edges_json(result.connectivity.edges));
        });

        stage(result, "layout", [&] {
            result.layout = two_stage_layout(result.modes, result.assign, result.data.x,
                                             result.connectivity, result.params.rho0);
            writer.write("layout.json", layout_json(result.layout));
            writer.write("layout.svg",
                         layout_svg(result.layout, result.assign.labels,
                                    cfg.color_by == "label" ? result.data.labels
                                                            : std::vector<std::string>{}));
        });

        stage(result, "manifest", [&] {
            json doc;
            doc["version"] = kVersion;
            doc["input"] = cfg.input_path;
            doc["n"] = result.data.n();
            doc["d"] = result.data.d();
            doc["standardize"] = cfg.standardize;
            doc["label_column"] = cfg.label_column;
            doc["seed"] = cfg.seed;
            doc["threads"] = cfg.threads;
            doc["color_by"] = cfg.color_by;
            doc["parameters"] = {{"h", round_sig(result.params.h)},
                                 {"n0", round_sig(result.params.n0)},
                                 {"rho0", round_sig(result.params.rho0)},
                                 {"omega0", round_sig(result.params.omega0)}};
            json overrides = json::object();
            if (cfg.h) overrides["h"] = round_sig(*cfg.h);
            if (cfg.n0) overrides["n0"] = round_sig(*cfg.n0);
            if (cfg.rho0) overrides["rho0"] = round_sig(*cfg.rho0);
            if (cfg.omega0) overrides["omega0"] = round_sig(*cfg.omega0);
            doc["overrides"] = overrides;
            doc["k_pre"] = result.k_pre;
            doc["k_post"] = result.k_post;
            json timings = json::object();
            for (const auto& [name, ms] : result.timings_ms) timings[name] = round_sig(ms, 6);
            doc["timings_ms"] = timings;
            writer.write("manifest.json", doc.dump(2) + "\n");
        });
    } catch (...) {
        writer.remove_all_written();
        throw;
    }
    return result;
}

}  // namespace modecluster
