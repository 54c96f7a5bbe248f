#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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
#include "modecluster/synth.hpp"

namespace py = pybind11;
namespace mc = modecluster;

namespace {

mc::MeanShiftOptions make_opts(int max_iter, double tol_scale, double merge_scale,
                               int threads) {
    mc::MeanShiftOptions opts;
    opts.max_iter = max_iter;
    opts.tol_scale = tol_scale;
    opts.merge_scale = merge_scale;
    opts.threads = threads;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Mode clustering: mean-shift clustering with soft assignment, "
              "cluster connectivity and two-stage MDS visualization";
#ifdef MODECLUSTER_VERSION
    m.attr("__version__") = MODECLUSTER_VERSION;
#else
    m.attr("__version__") = "dev";
#endif

    py::register_exception<mc::InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<mc::IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<mc::EmptyDataset>(m, "EmptyDatasetError", PyExc_ValueError);
    py::register_exception<mc::DegenerateColumn>(m, "DegenerateColumnError", PyExc_ValueError);
    py::register_exception<mc::SingularSystem>(m, "SingularSystemError", PyExc_ArithmeticError);
    py::register_exception<mc::NonConvergence>(m, "NonConvergenceError", PyExc_ArithmeticError);
    py::register_exception<mc::AllClustersInsignificant>(m, "AllClustersInsignificantError",
                                                         PyExc_ValueError);
    py::register_exception<mc::EmptyCluster>(m, "EmptyClusterError", PyExc_ValueError);

    py::class_<mc::DataMatrix>(m, "DataMatrix")
        .def_readonly("x", &mc::DataMatrix::x)
        .def_readonly("col_mean", &mc::DataMatrix::col_mean)
        .def_readonly("col_sd", &mc::DataMatrix::col_sd)
        .def_readonly("labels", &mc::DataMatrix::labels)
        .def_readonly("feature_names", &mc::DataMatrix::feature_names)
        .def_readonly("skipped_rows", &mc::DataMatrix::skipped_rows)
        .def_readonly("standardized", &mc::DataMatrix::standardized)
        .def_property_readonly("n", &mc::DataMatrix::n)
        .def_property_readonly("d", &mc::DataMatrix::d);

    m.def("make_data_matrix", &mc::make_data_matrix, py::arg("x"),
          py::arg("labels") = std::vector<std::string>{},
          "Wrap an n x d array, computing per-column statistics");
    m.def("load_csv", &mc::load_csv, py::arg("path"), py::arg("label_column") = "");
    m.def("standardize", &mc::standardize, py::arg("dm"));

    m.def("normal_reference_h", &mc::normal_reference_h, py::arg("n"), py::arg("d"),
          py::arg("mean_sd"));
    m.def("denoise_threshold", &mc::denoise_threshold, py::arg("n"), py::arg("d"));
    m.def("default_omega0", &mc::default_omega0, py::arg("k"));

    py::class_<mc::DensityModel>(m, "DensityModel")
        .def(py::init<Eigen::MatrixXd, double>(), py::arg("data"), py::arg("h"))
        .def("density", &mc::DensityModel::density, py::arg("x"))
        .def("gradient", &mc::DensityModel::gradient, py::arg("x"))
        .def("kernel_weight", &mc::DensityModel::kernel_weight, py::arg("a"), py::arg("b"))
        .def_property_readonly("h", &mc::DensityModel::h)
        .def_property_readonly("data", [](const mc::DensityModel& self) { return self.data(); });

    py::class_<mc::ModeSet>(m, "ModeSet")
        .def_readonly("modes", &mc::ModeSet::modes)
        .def_property_readonly("count", &mc::ModeSet::count);

    py::class_<mc::ClusterAssignment>(m, "ClusterAssignment")
        .def_readonly("labels", &mc::ClusterAssignment::labels)
        .def_readonly("destinations", &mc::ClusterAssignment::destinations)
        .def_readonly("sizes", &mc::ClusterAssignment::sizes)
        .def_readonly("nonconverged", &mc::ClusterAssignment::nonconverged)
        .def_readonly("force_assigned", &mc::ClusterAssignment::force_assigned);

    m.def(
        "ascend",
        [](const mc::DensityModel& model, const Eigen::VectorXd& x0, int max_iter,
           double tol_scale, double merge_scale, int threads) {
            return mc::ascend(model, x0, make_opts(max_iter, tol_scale, merge_scale, threads));
        },
        py::arg("model"), py::arg("x0"), py::arg("max_iter") = 500,
        py::arg("tol_scale") = 1e-7, py::arg("merge_scale") = 0.1, py::arg("threads") = 0);

    m.def(
        "cluster",
        [](const mc::DensityModel& model, int max_iter, double tol_scale, double merge_scale,
           int threads) {
            return mc::cluster(model, make_opts(max_iter, tol_scale, merge_scale, threads));
        },
        py::arg("model"), py::arg("max_iter") = 500, py::arg("tol_scale") = 1e-7,
        py::arg("merge_scale") = 0.1, py::arg("threads") = 0,
        "Mean-shift mode clustering; returns (ModeSet, ClusterAssignment)");

    m.def("sc_plot",
          [](const mc::ClusterAssignment& assign, double n0) {
              const mc::SCPlotData sc = mc::sc_plot(assign, n0);
              return py::make_tuple(sc.sorted_sizes, sc.threshold);
          },
          py::arg("assign"), py::arg("n0"),
          "Descending cluster sizes with the threshold attached");

    m.def(
        "denoise",
        [](const mc::DensityModel& model, const mc::ModeSet& modes,
           const mc::ClusterAssignment& assign, double n0, int max_iter, double tol_scale,
           double merge_scale, int threads, int max_rounds) {
            return mc::denoise(model, modes, assign, n0,
                               make_opts(max_iter, tol_scale, merge_scale, threads), max_rounds);
        },
        py::arg("model"), py::arg("modes"), py::arg("assign"), py::arg("n0"),
        py::arg("max_iter") = 500, py::arg("tol_scale") = 1e-7, py::arg("merge_scale") = 0.1,
        py::arg("threads") = 0, py::arg("max_rounds") = 10,
        "Merge clusters smaller than n0 via reduced-dataset re-clustering");

    py::class_<mc::SoftAssignment>(m, "SoftAssignment")
        .def_readonly("a", &mc::SoftAssignment::a);

    m.def("transition_blocks", &mc::transition_blocks, py::arg("model"), py::arg("modes"),
          "Absorbing-chain blocks (S, T)");
    m.def("absorb", &mc::absorb, py::arg("S"), py::arg("T"),
          "Absorbing probabilities (I - T)^-1 S");
    m.def("soft_assign", &mc::soft_assign, py::arg("model"), py::arg("modes"));

    py::class_<mc::Edge>(m, "Edge")
        .def_readonly("i", &mc::Edge::i)
        .def_readonly("j", &mc::Edge::j)
        .def_readonly("weight", &mc::Edge::weight)
        .def("__repr__", [](const mc::Edge& e) {
            return "Edge(" + std::to_string(e.i) + ", " + std::to_string(e.j) + ", "
                   + std::to_string(e.weight) + ")";
        });

    py::class_<mc::ConnectivityMatrix>(m, "ConnectivityMatrix")
        .def_readonly("omega", &mc::ConnectivityMatrix::omega)
        .def_readonly("edges", &mc::ConnectivityMatrix::edges);

    m.def("connectivity_matrix", &mc::connectivity_matrix, py::arg("a"), py::arg("assign"));
    m.def("edge_set", &mc::edge_set, py::arg("cm"), py::arg("omega0"));

    py::class_<mc::LayoutResult>(m, "LayoutResult")
        .def_readonly("mode_xy", &mc::LayoutResult::mode_xy)
        .def_readonly("point_xy", &mc::LayoutResult::point_xy)
        .def_readonly("edges", &mc::LayoutResult::edges)
        .def_readonly("rho0", &mc::LayoutResult::rho0);

    m.def("classical_mds", &mc::classical_mds, py::arg("points"), py::arg("target_dim") = 2);
    m.def("two_stage_layout", &mc::two_stage_layout, py::arg("modes"), py::arg("assign"),
          py::arg("data"), py::arg("cm"), py::arg("rho0"));

    py::class_<mc::ContingencyTable>(m, "ContingencyTable")
        .def_readonly("row_names", &mc::ContingencyTable::row_names)
        .def_readonly("counts", &mc::ContingencyTable::counts)
        .def_readonly("row_marginals", &mc::ContingencyTable::row_marginals)
        .def_readonly("col_marginals", &mc::ContingencyTable::col_marginals);

    m.def("confusion", &mc::confusion, py::arg("labels_true"), py::arg("labels_pred"));
    m.def("adjusted_rand",
          py::overload_cast<const std::vector<int>&, const std::vector<int>&>(
              &mc::adjusted_rand),
          py::arg("labels_a"), py::arg("labels_b"));
    m.def("adjusted_rand_strings",
          py::overload_cast<const std::vector<std::string>&, const std::vector<int>&>(
              &mc::adjusted_rand),
          py::arg("labels_a"), py::arg("labels_b"));

    m.def("gen_five_cluster", &mc::gen_five_cluster, py::arg("seed"));
    m.def("gen_four_gaussian_8d", &mc::gen_four_gaussian_8d, py::arg("seed"));
    m.def("gen_two_gaussian_1d", &mc::gen_two_gaussian_1d, py::arg("seed"), py::arg("n"));

    m.def(
        "run_pipeline",
        [](const std::string& input, const std::string& label_column, bool standardize,
           std::optional<double> h, std::optional<double> n0, std::optional<double> rho0,
           std::optional<double> omega0, const std::string& out_dir, std::uint64_t seed,
           int threads, const std::string& color_by) {
            mc::RunConfig cfg;
            cfg.input_path = input;
            cfg.label_column = label_column;
            cfg.standardize = standardize;
            cfg.h = h;
            cfg.n0 = n0;
            cfg.rho0 = rho0;
            cfg.omega0 = omega0;
            cfg.out_dir = out_dir;
            cfg.seed = seed;
            cfg.threads = threads;
            cfg.color_by = color_by;
            const mc::RunResult res = mc::run_pipeline(cfg);
            py::dict out;
            out["h"] = res.params.h;
            out["n0"] = res.params.n0;
            out["rho0"] = res.params.rho0;
            out["omega0"] = res.params.omega0;
            out["k_pre"] = res.k_pre;
            out["k_post"] = res.k_post;
            out["labels"] = res.assign.labels;
            out["sizes"] = res.assign.sizes;
            out["modes"] = res.modes.modes;
            out["omega"] = res.connectivity.omega;
            out["edges"] = res.connectivity.edges;
            return out;
        },
        py::arg("input"), py::arg("label_column") = "", py::arg("standardize") = true,
        py::arg("h") = std::nullopt, py::arg("n0") = std::nullopt,
        py::arg("rho0") = std::nullopt, py::arg("omega0") = std::nullopt,
        py::arg("out_dir") = ".", py::arg("seed") = 0, py::arg("threads") = 0,
        py::arg("color_by") = "cluster",
        "Full pipeline run; writes artifacts to out_dir and returns a summary dict");
}
