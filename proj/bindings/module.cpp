#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsel/features.hpp"
#include "qsel/graph.hpp"
#include "qsel/gw.hpp"
#include "qsel/pipeline.hpp"
#include "qsel/qaoa.hpp"
#include "qsel/selector.hpp"

namespace py = pybind11;
using namespace qsel;

PYBIND11_MODULE(_qselect, m) {
    m.doc() = "MaxCut algorithm selection: QAOA vs Goemans-Williamson";

    py::register_exception<numerical_error>(m, "NumericalError");

    py::class_<Edge>(m, "Edge")
        .def(py::init([](int u, int v, double w) { return Edge{u, v, w}; }), py::arg("u"),
             py::arg("v"), py::arg("w") = 1.0)
        .def_readonly("u", &Edge::u)
        .def_readonly("v", &Edge::v)
        .def_readonly("w", &Edge::w);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::tuple<int, int, double>>& edges) {
                 std::vector<Edge> es;
                 for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
                 return Graph(n, std::move(es));
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::tuple<int, int, double>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.w);
                 return out;
             })
        .def("is_connected", &Graph::is_connected)
        .def("to_json", &Graph::to_json)
        .def_static("from_json", &Graph::from_json);

    m.def("generate_regular", &generate_regular, py::arg("n"), py::arg("degree"), py::arg("seed"));
    m.def("maxcut_cost", &maxcut_cost, py::arg("graph"), py::arg("z"));
    m.def(
        "brute_force_max",
        [](const Graph& g) {
            const CutAssignment cut = brute_force_max(g);
            return py::make_tuple(cut.cost, cut.z);
        },
        py::arg("graph"));

    py::class_<GwStats>(m, "GwStats")
        .def_readonly("expected_cost", &GwStats::expected_cost)
        .def_readonly("std_cost", &GwStats::std_cost)
        .def_readonly("best_cost", &GwStats::best_cost)
        .def_readonly("relaxed_cost", &GwStats::relaxed_cost)
        .def_readonly("m", &GwStats::m);

    m.def("estimate_gw", &estimate_gw, py::arg("graph"), py::arg("projections") = 1000,
          py::arg("seed") = 0, py::arg("tol") = 1e-8, py::arg("max_iters") = 10000);

    py::class_<QaoaAngles>(m, "QaoaAngles")
        .def(py::init([](std::vector<double> gammas, std::vector<double> betas) {
                 QaoaAngles a;
                 a.gammas = std::move(gammas);
                 a.betas = std::move(betas);
                 return a;
             }),
             py::arg("gammas"), py::arg("betas"))
        .def_readonly("gammas", &QaoaAngles::gammas)
        .def_readonly("betas", &QaoaAngles::betas)
        .def("zero_padded", &QaoaAngles::zero_padded);

    m.def("qaoa_expected_cost", py::overload_cast<const Graph&, const QaoaAngles&>(&expected_cost),
          py::arg("graph"), py::arg("angles"));
    m.def(
        "optimize_angles",
        [](const Graph& g, double c_max, int p, int random_starts, int evals_per_start,
           std::uint64_t seed) {
            AngleOptimizeOptions opts;
            opts.random_starts = random_starts;
            opts.evals_per_start = evals_per_start;
            opts.seed = seed;
            const QaoaRun run = optimize_angles(g, c_max, p, opts);
            py::dict out;
            out["gammas"] = run.angles.gammas;
            out["betas"] = run.angles.betas;
            out["f_p"] = run.f_p;
            out["ratio"] = run.ratio;
            out["evaluations"] = run.evaluations;
            return out;
        },
        py::arg("graph"), py::arg("c_max"), py::arg("p"), py::arg("random_starts") = 10,
        py::arg("evals_per_start") = 0, py::arg("seed") = 0);

    m.def(
        "compute_features",
        [](const Graph& g, int projections, std::uint64_t seed) {
            const SdpSolution sol = solve_sdp(g, 1e-8, 10000, seed);
            const GwStats st = project_stats(g, sol, projections, seed);
            const FeatureVector f = compute_features(g, sol, st);
            py::dict out;
            const auto vals = f.values();
            const auto& names = FeatureVector::names();
            for (int i = 0; i < kNumFeatures; ++i) out[names[i].c_str()] = vals[i];
            return out;
        },
        py::arg("graph"), py::arg("projections") = 1000, py::arg("seed") = 0);

    m.def("label_criterion1", &label_criterion1, py::arg("qaoa_ratio"), py::arg("gw_ratio"));
    m.def("label_criterion2", &label_criterion2, py::arg("qaoa_ratio"), py::arg("gw_ratio"));

    py::class_<FittedPipeline>(m, "FittedPipeline")
        .def_readonly("criterion", &FittedPipeline::criterion)
        .def_readonly("feature_names", &FittedPipeline::feature_names)
        .def("predict", &FittedPipeline::predict, py::arg("x"))
        .def("proba_class1", &FittedPipeline::proba_class1, py::arg("x"))
        .def("to_json", &FittedPipeline::to_json)
        .def_static("from_json", &FittedPipeline::from_json);

    m.def(
        "fit_pipeline",
        [](int criterion, const Matrix& x, const std::vector<int>& y) {
            PipelineSpec spec = criterion == 1 ? default_spec_crit1() : default_spec_crit2();
            return fit_pipeline(spec, x, y);
        },
        py::arg("criterion"), py::arg("x"), py::arg("y"));
    m.def(
        "cross_validate",
        [](const Matrix& x, const std::vector<int>& y, int criterion, int folds,
           std::uint64_t seed) {
            const CvReport rep = cross_validate(x, y, criterion, folds, seed);
            py::dict out;
            out["fold_balanced_accuracy"] = rep.fold_balanced_accuracy;
            out["mean_balanced_accuracy"] = rep.mean_balanced_accuracy;
            out["fold_recall_class1"] = rep.fold_recall_class1;
            return out;
        },
        py::arg("x"), py::arg("y"), py::arg("criterion"), py::arg("folds") = 4, py::arg("seed") = 0);

    m.def(
        "run_experiment",
        [](const std::string& manifest_json) {
            return run_experiment(ExperimentManifest::from_json(manifest_json));
        },
        py::arg("manifest_json"));
    m.attr("__version__") = "0.1.0";
}
