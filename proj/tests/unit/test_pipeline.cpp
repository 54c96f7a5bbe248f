#include <filesystem>
#include <fstream>

#include <doctest.h>
#include <json.hpp>

#include "modecluster/artifacts.hpp"
#include "modecluster/pipeline.hpp"
#include "modecluster/synth.hpp"
#include "../support/tempdir.hpp"

using namespace modecluster;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string write_synth_csv(const mctest::TempDir& tmp, const DataMatrix& dm,
                            const std::string& name) {
    std::ostringstream out;
    for (Eigen::Index j = 0; j < dm.d(); ++j) out << "x" << (j + 1) << ",";
    out << "label\n";
    out.precision(17);
    for (Eigen::Index i = 0; i < dm.n(); ++i) {
        for (Eigen::Index j = 0; j < dm.d(); ++j) out << dm.x(i, j) << ",";
        out << dm.labels[static_cast<std::size_t>(i)] << "\n";
    }
    return tmp.write(name, out.str());
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("full run writes every artifact with rule-derived parameters") {
    mctest::TempDir tmp;
    const std::string input = write_synth_csv(tmp, gen_four_gaussian_8d(1), "four.csv");

    RunConfig cfg;
    cfg.input_path = input;
    cfg.label_column = "label";
    cfg.standardize = false;
    cfg.out_dir = (tmp.path() / "out").string();
    const RunResult res = run_pipeline(cfg);

    CHECK(res.k_post == 4);
    CHECK(res.params.omega0 == doctest::Approx(0.125));  // 1/(2*4)

    for (const char* name :
         {"labels.json", "modes.json", "soft.csv", "omega.csv", "edges.json", "scplot.csv",
          "scplot.svg", "layout.json", "layout.svg", "manifest.json"}) {
        CHECK(fs::exists(fs::path(cfg.out_dir) / name));
    }

    const json manifest = json::parse(read_file((fs::path(cfg.out_dir) / "manifest.json").string()));
    CHECK(manifest["n"] == 800);
    CHECK(manifest["d"] == 8);
    CHECK(manifest["k_post"] == 4);
    CHECK(manifest["parameters"]["h"].get<double>() == doctest::Approx(res.params.h));
    CHECK(manifest["parameters"]["n0"].get<double>() == doctest::Approx(24.37).epsilon(0.01));
    CHECK(manifest["overrides"].empty());

    const json labels = json::parse(read_file((fs::path(cfg.out_dir) / "labels.json").string()));
    CHECK(labels["labels"].size() == 800);
    const json layout = json::parse(read_file((fs::path(cfg.out_dir) / "layout.json").string()));
    CHECK(layout["point_xy"].size() == 800);
    CHECK(layout["mode_xy"].size() == 4);

    // soft.csv has n rows and k columns at 6 decimals
    const Eigen::MatrixXd soft =
        parse_matrix_csv(read_file((fs::path(cfg.out_dir) / "soft.csv").string()));
    CHECK(soft.rows() == 800);
    CHECK(soft.cols() == 4);
    for (Eigen::Index i = 0; i < soft.rows(); ++i) {
        CHECK(std::abs(soft.row(i).sum() - 1.0) < 1e-3);  // 6-decimal rounding
    }
}

TEST_CASE("numeric artifacts are byte-identical across reruns") {
    mctest::TempDir tmp;
    const std::string input = write_synth_csv(tmp, gen_four_gaussian_8d(2), "four.csv");

    RunConfig cfg;
    cfg.input_path = input;
    cfg.label_column = "label";
    cfg.standardize = false;
    cfg.out_dir = (tmp.path() / "a").string();
    run_pipeline(cfg);
    RunConfig cfg2 = cfg;
    cfg2.out_dir = (tmp.path() / "b").string();
    run_pipeline(cfg2);

    for (const char* name : {"labels.json", "modes.json", "soft.csv", "omega.csv",
                             "edges.json", "scplot.csv", "layout.json"}) {
        const std::string a = read_file((fs::path(cfg.out_dir) / name).string());
        const std::string b = read_file((fs::path(cfg2.out_dir) / name).string());
        CHECK(a == b);
    }
}

TEST_CASE("explicit overrides take precedence and are echoed") {
    mctest::TempDir tmp;
    const std::string input = write_synth_csv(tmp, gen_four_gaussian_8d(3), "four.csv");

    RunConfig cfg;
    cfg.input_path = input;
    cfg.label_column = "label";
    cfg.standardize = false;
    cfg.h = 0.2;
    cfg.n0 = 30.0;
    cfg.rho0 = 2.0;
    cfg.omega0 = 0.05;
    cfg.out_dir = (tmp.path() / "out").string();
    const RunResult res = run_pipeline(cfg);

    CHECK(res.params.h == 0.2);
    CHECK(res.params.n0 == 30.0);
    CHECK(res.params.rho0 == 2.0);
    CHECK(res.params.omega0 == 0.05);

    const json manifest = json::parse(read_file((fs::path(cfg.out_dir) / "manifest.json").string()));
    CHECK(manifest["overrides"]["h"].get<double>() == 0.2);
    CHECK(manifest["parameters"]["omega0"].get<double>() == 0.05);
}

TEST_CASE("a failing stage names itself and removes partial outputs") {
    mctest::TempDir tmp;
    RunConfig cfg;
    cfg.input_path = (tmp.path() / "missing.csv").string();
    cfg.out_dir = (tmp.path() / "out").string();
    try {
        run_pipeline(cfg);
        FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == "load");
        CHECK(e.exit_code() == 4);
    }

    // a later-stage failure removes the artifacts written before it
    const std::string input = write_synth_csv(tmp, gen_four_gaussian_8d(4), "four.csv");
    RunConfig cfg2;
    cfg2.input_path = input;
    cfg2.label_column = "label";
    cfg2.standardize = false;
    cfg2.n0 = 1e9;  // denoise stage must fail
    cfg2.out_dir = (tmp.path() / "out2").string();
    try {
        run_pipeline(cfg2);
        FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == "denoise");
    }
    CHECK(!fs::exists(fs::path(cfg2.out_dir) / "scplot.csv"));
    CHECK(!fs::exists(fs::path(cfg2.out_dir) / "labels.json"));
}

TEST_CASE("round_sig keeps nine significant digits") {
    CHECK(round_sig(0.123456789123, 9) == doctest::Approx(0.123456789).epsilon(1e-12));
    CHECK(round_sig(12345678912.3, 9) == doctest::Approx(12345678900.0));
    CHECK(round_sig(0.0) == 0.0);
    CHECK(round_sig(-1.23456789456e-7, 9) == doctest::Approx(-1.23456789e-7));
}

TEST_CASE("cluster artifact json round-trips") {
    ModeSet modes;
    modes.modes.resize(2, 3);
    modes.modes << 0.25, -1.5, 3.0, 1.0, 2.0, -0.125;
    ClusterAssignment assign;
    assign.labels = {0, 0, 1};
    assign.sizes = {2, 1};
    assign.destinations.resize(3, 3);
    assign.destinations.setZero();

    const std::string text = cluster_json(modes, assign);
    ModeSet modes2;
    ClusterAssignment assign2;
    parse_cluster_json(text, modes2, assign2);
    CHECK((modes2.modes - modes.modes).cwiseAbs().maxCoeff() == 0.0);
    CHECK(assign2.labels == assign.labels);
    CHECK(assign2.sizes == assign.sizes);
}

}  // TEST_SUITE
