#include <cstdio>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "qsel/features.hpp"
#include "qsel/graph.hpp"
#include "qsel/gw.hpp"
#include "qsel/pipeline.hpp"
#include "qsel/qaoa.hpp"
#include "qsel/rng.hpp"
#include "qsel/selector.hpp"

namespace qsel {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

Graph load_graph(const std::string& path) { return Graph::from_json(slurp(path)); }

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// features.csv reader: instance ids plus the columns named in `wanted`
// (resolved against the header; all 20 when `wanted` is empty).
struct FeatureTable {
    std::vector<std::string> ids;
    std::vector<std::string> columns;
    Matrix x;
};

FeatureTable read_feature_table(const std::string& path, const std::vector<std::string>& wanted) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read " + path);
    std::string line;
    std::vector<std::string> header;
    FeatureTable out;
    auto split = [](const std::string& s) {
        std::vector<std::string> cols;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) cols.push_back(tok);
        return cols;
    };
    std::vector<int> take;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto cols = split(line);
        if (header.empty()) {
            header = cols;
            const auto& names = wanted.empty()
                                    ? std::vector<std::string>(FeatureVector::names().begin(),
                                                               FeatureVector::names().end())
                                    : wanted;
            for (const auto& name : names) {
                auto it = std::find(header.begin(), header.end(), name);
                if (it == header.end())
                    throw std::invalid_argument("feature column missing: " + name);
                take.push_back(static_cast<int>(it - header.begin()));
                out.columns.push_back(name);
            }
            continue;
        }
        out.ids.push_back(cols.at(0));
        std::vector<double> row;
        for (int idx : take) row.push_back(std::stod(cols.at(idx)));
        out.x.push_back(std::move(row));
    }
    if (header.empty()) throw std::invalid_argument("no header row in " + path);
    return out;
}

std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

PipelineSpec spec_for(int criterion, const std::string& feature_list) {
    PipelineSpec spec = criterion == 1 ? default_spec_crit1() : default_spec_crit2();
    if (!feature_list.empty()) spec.feature_indices = parse_index_list(feature_list);
    for (int idx : spec.feature_indices)
        if (idx < 0 || idx >= kNumFeatures)
            throw std::invalid_argument("feature index out of range: " + std::to_string(idx));
    return spec;
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"MaxCut algorithm-selection toolkit: QAOA vs Goemans-Williamson"};
    app.require_subcommand(1);

    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress informational output");

    std::ostringstream devnull;
    auto& info = [&]() -> std::ostream& { return quiet ? static_cast<std::ostream&>(devnull) : std::cout; }();

    // generate
    auto* gen = app.add_subcommand("generate", "draw a random degree-regular graph");
    int gen_n = 10, gen_degree = 4;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n, "number of vertices")->required();
    gen->add_option("--degree", gen_degree, "vertex degree");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output path (stdout when omitted)");
    gen->callback([&] {
        const Graph g = generate_regular(gen_n, gen_degree, gen_seed);
        if (gen_out.empty())
            std::cout << g.to_json() << "\n";
        else
            spill(gen_out, g.to_json());
    });

    // oracle
    auto* orc = app.add_subcommand("oracle", "exhaustive MaxCut optimum");
    std::string orc_graph;
    orc->add_option("--graph", orc_graph, "graph JSON path")->required();
    orc->callback([&] {
        const Graph g = load_graph(orc_graph);
        const CutAssignment best = brute_force_max(g);
        std::cout << "c_max " << fmt(best.cost) << "\nassignment";
        for (int z : best.z) std::cout << ' ' << z;
        std::cout << "\n";
    });

    // gw
    auto* gwc = app.add_subcommand("gw", "SDP relaxation + hyperplane rounding statistics");
    std::string gw_graph;
    int gw_m = 1000;
    std::uint64_t gw_seed = 1;
    gwc->add_option("--graph", gw_graph, "graph JSON path")->required();
    gwc->add_option("--projections", gw_m, "number of random hyperplanes");
    gwc->add_option("--seed", gw_seed, "rounding seed");
    gwc->callback([&] {
        const Graph g = load_graph(gw_graph);
        const GwStats st = estimate_gw(g, gw_m, gw_seed);
        std::cout << "gw_expected_cost,gw_std_cost,gw_best_cost,c_rlx\n"
                  << fmt(st.expected_cost) << ',' << fmt(st.std_cost) << ','
                  << fmt(st.best_cost) << ',' << fmt(st.relaxed_cost) << "\n";
    });

    // qaoa
    auto* qc = app.add_subcommand("qaoa", "optimize QAOA angles for one graph");
    std::string q_graph;
    int q_p = 1, q_starts = 10, q_evals = 0, q_samples = 0;
    std::uint64_t q_seed = 1;
    qc->add_option("--graph", q_graph, "graph JSON path")->required();
    qc->add_option("--p", q_p, "circuit depth")->required();
    qc->add_option("--starts", q_starts, "random starts");
    qc->add_option("--evals", q_evals, "objective evaluations per start (0 = 400*2p)");
    qc->add_option("--samples", q_samples, "also draw this many cuts and report their std");
    qc->add_option("--seed", q_seed, "optimizer seed");
    qc->callback([&] {
        const Graph g = load_graph(q_graph);
        const double c_max = brute_force_max(g).cost;
        AngleOptimizeOptions opts;
        opts.random_starts = q_starts;
        opts.evals_per_start = q_evals;
        opts.seed = q_seed;
        QaoaRun run = optimize_angles(g, c_max, q_p, opts);
        if (q_samples > 0) {
            const SampleStats st =
                sample_cut_distribution(g, run.angles, q_samples, mix_seed(q_seed, 0x5704));
            run.sample_std = st.stddev / c_max;
        }
        std::cout << "p,gammas,betas,f_p,ratio,sample_std,evaluations,seed\n" << q_p << ',';
        for (std::size_t i = 0; i < run.angles.gammas.size(); ++i)
            std::cout << (i ? ";" : "") << fmt(run.angles.gammas[i]);
        std::cout << ',';
        for (std::size_t i = 0; i < run.angles.betas.size(); ++i)
            std::cout << (i ? ";" : "") << fmt(run.angles.betas[i]);
        std::cout << ',' << fmt(run.f_p) << ',' << fmt(run.ratio) << ','
                  << (run.sample_std ? fmt(*run.sample_std) : "") << ',' << run.evaluations << ','
                  << run.seed << "\n";
    });

    // features
    auto* fc = app.add_subcommand("features", "compute the 20 instance features");
    std::string f_graph;
    bool f_skip_expensive = false;
    std::uint64_t f_seed = 1;
    fc->add_option("--graph", f_graph, "graph JSON path")->required();
    fc->add_flag("--skip-expensive", f_skip_expensive, "leave the NP-hard set numbers at 0");
    fc->add_option("--seed", f_seed, "GW seed for the group-(iii) features");
    fc->callback([&] {
        const Graph g = load_graph(f_graph);
        const SdpSolution sol = solve_sdp(g, 1e-8, 10000, f_seed);
        const GwStats st = project_stats(g, sol, 1000, f_seed);
        FeatureVector fv;
        spectral_features(g, spectrum(g), fv);
        if (!f_skip_expensive) set_number_features(g, fv);
        gw_features(sol, st, g, fv);
        const auto vals = fv.values();
        const auto& names = FeatureVector::names();
        for (int i = 0; i < kNumFeatures; ++i)
            std::cout << names[i] << ',' << fmt(vals[i]) << "\n";
    });

    // label
    auto* lc = app.add_subcommand("label", "advantage labels from a ratio pair");
    double l_qaoa = 0.0, l_gw = 0.0;
    lc->add_option("--qaoa-ratio", l_qaoa, "QAOA approximation ratio")->required();
    lc->add_option("--gw-ratio", l_gw, "GW approximation ratio")->required();
    lc->callback([&] {
        std::cout << "label_crit1," << label_criterion1(l_qaoa, l_gw) << "\n"
                  << "label_crit2," << label_criterion2(l_qaoa, l_gw) << "\n";
    });

    // summarize
    auto* sc = app.add_subcommand("summarize", "per-depth ratio table for a dataset directory");
    std::string s_dir;
    sc->add_option("--dataset", s_dir, "dataset directory")->required();
    sc->callback([&] {
        const SummaryTable t = summarize(s_dir);
        std::cout
            << "depth,min_ratio,q1,median_ratio,q3,max_ratio,mean_ratio,pct_qaoa_beats_gw,mean_sample_std\n";
        for (const auto& r : t.rows)
            std::cout << r.depth << ',' << fmt(r.min_ratio) << ',' << fmt(r.q1) << ','
                      << fmt(r.median_ratio) << ',' << fmt(r.q3) << ',' << fmt(r.max_ratio) << ','
                      << fmt(r.mean_ratio) << ',' << fmt(r.pct_qaoa_beats_gw) << ','
                      << fmt(r.mean_sample_std) << "\n";
        info << "log_fit_a=" << fmt(t.log_fit_a) << " log_fit_b=" << fmt(t.log_fit_b)
             << " crossing_depth=" << fmt(t.crossing_depth) << "\n";
    });

    // train
    auto* tc = app.add_subcommand("train", "fit a selector pipeline on a dataset");
    std::string t_dir, t_out = "model.json", t_features;
    int t_criterion = 1;
    tc->add_option("--dataset", t_dir, "dataset directory")->required();
    tc->add_option("--criterion", t_criterion, "1 or 2")->check(CLI::Range(1, 2));
    tc->add_option("--features", t_features, "comma-separated feature indices (overrides default)");
    tc->add_option("--out", t_out, "model JSON output path");
    tc->callback([&] {
        const LabeledDataset ds = load_labeled_dataset(t_dir);
        const FittedPipeline model = fit_pipeline(spec_for(t_criterion, t_features), ds);
        spill(t_out, model.to_json());
        info << "trained criterion " << t_criterion << " on " << ds.rows.size() << " rows -> "
             << t_out << "\n";
    });

    // cv
    auto* cc = app.add_subcommand("cv", "stratified k-fold cross-validation");
    std::string c_dir, c_features;
    int c_criterion = 1, c_folds = 4;
    std::uint64_t c_seed = 0;
    cc->add_option("--dataset", c_dir, "dataset directory")->required();
    cc->add_option("--criterion", c_criterion, "1 or 2")->check(CLI::Range(1, 2));
    cc->add_option("--features", c_features, "comma-separated feature indices");
    cc->add_option("--folds", c_folds, "fold count")->check(CLI::Range(2, 100));
    cc->add_option("--seed", c_seed, "fold shuffle seed");
    cc->callback([&] {
        const LabeledDataset ds = load_labeled_dataset(c_dir);
        const CvReport rep = cross_validate(ds, spec_for(c_criterion, c_features), c_folds, c_seed);
        std::cout << "fold,balanced_accuracy,recall_class1\n";
        for (std::size_t i = 0; i < rep.fold_balanced_accuracy.size(); ++i)
            std::cout << i << ',' << fmt(rep.fold_balanced_accuracy[i]) << ','
                      << fmt(rep.fold_recall_class1[i]) << "\n";
        std::cout << "mean_balanced_accuracy," << fmt(rep.mean_balanced_accuracy) << "\n";
    });

    // predict
    auto* pc = app.add_subcommand("predict", "apply a trained model to a feature table");
    std::string p_model, p_features;
    pc->add_option("--model", p_model, "model JSON path")->required();
    pc->add_option("--features", p_features, "features CSV path")->required();
    pc->callback([&] {
        const FittedPipeline model = FittedPipeline::from_json(slurp(p_model));
        const FeatureTable table = read_feature_table(p_features, model.feature_names);
        const auto labels = model.predict(table.x);
        const auto proba = model.proba_class1(table.x);
        std::cout << "instance_id,label,proba_class1\n";
        for (std::size_t i = 0; i < table.ids.size(); ++i)
            std::cout << table.ids[i] << ',' << labels[i] << ',' << fmt(proba[i]) << "\n";
    });

    // importance
    auto* ic = app.add_subcommand("importance", "permutation feature importance");
    std::string i_model, i_dir;
    int i_repeats = 10;
    std::uint64_t i_seed = 0;
    ic->add_option("--model", i_model, "model JSON path")->required();
    ic->add_option("--dataset", i_dir, "dataset directory")->required();
    ic->add_option("--repeats", i_repeats, "shuffles per feature")->check(CLI::Range(1, 1000));
    ic->add_option("--seed", i_seed, "shuffle seed");
    ic->callback([&] {
        const FittedPipeline model = FittedPipeline::from_json(slurp(i_model));
        const LabeledDataset ds = load_labeled_dataset(i_dir);
        std::vector<int> idx;
        for (const auto& name : model.feature_names) {
            const auto& names = FeatureVector::names();
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw std::invalid_argument("unknown model feature " + name);
            idx.push_back(static_cast<int>(it - names.begin()));
        }
        const Matrix x = ds.feature_matrix(idx);
        const auto y = ds.labels(model.criterion);
        const auto imp = permutation_importance(model, x, y, i_repeats, i_seed);
        std::cout << "feature,mean_drop,std_drop\n";
        for (std::size_t i = 0; i < imp.size(); ++i)
            std::cout << model.feature_names[i] << ',' << fmt(imp[i].mean_drop) << ','
                      << fmt(imp[i].std_drop) << "\n";
    });

    // pdp
    auto* dc = app.add_subcommand("pdp", "two-feature partial dependence grid");
    std::string d_model, d_dir;
    int d_a = 0, d_b = 1, d_grid = 10;
    dc->add_option("--model", d_model, "model JSON path")->required();
    dc->add_option("--dataset", d_dir, "dataset directory")->required();
    dc->add_option("--feature-a", d_a, "first feature (index within the model's feature set)");
    dc->add_option("--feature-b", d_b, "second feature (index within the model's feature set)");
    dc->add_option("--grid", d_grid, "grid resolution")->check(CLI::Range(1, 200));
    dc->callback([&] {
        const FittedPipeline model = FittedPipeline::from_json(slurp(d_model));
        const LabeledDataset ds = load_labeled_dataset(d_dir);
        std::vector<int> idx;
        for (const auto& name : model.feature_names) {
            const auto& names = FeatureVector::names();
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw std::invalid_argument("unknown model feature " + name);
            idx.push_back(static_cast<int>(it - names.begin()));
        }
        const Matrix x = ds.feature_matrix(idx);
        const PartialDependence pd = partial_dependence(model, x, d_a, d_b, d_grid);
        std::cout << "a_value,b_value,mean_proba_class1\n";
        for (std::size_t a = 0; a < pd.a_values.size(); ++a)
            for (std::size_t b = 0; b < pd.b_values.size(); ++b)
                std::cout << fmt(pd.a_values[a]) << ',' << fmt(pd.b_values[b]) << ','
                          << fmt(pd.mean_probability[a][b]) << "\n";
    });

    // run-all
    auto* rc = app.add_subcommand("run-all", "end-to-end dataset generation from a manifest");
    std::string r_manifest, r_out;
    int r_threads = -1;
    rc->add_option("--manifest", r_manifest, "manifest JSON path")->required();
    rc->add_option("--out", r_out, "override the manifest output directory");
    rc->add_option("--threads", r_threads, "override the manifest thread count");
    rc->callback([&] {
        ExperimentManifest m = ExperimentManifest::load(r_manifest);
        if (!r_out.empty()) m.out_dir = r_out;
        if (r_threads >= 0) m.threads = r_threads;
        const int failures = run_experiment(m);
        info << "dataset written to " << m.out_dir << " (" << failures << " failures)\n";
        if (failures > 0) throw numerical_error("instance failures: " + std::to_string(failures));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace qsel

int main(int argc, char** argv) { return qsel::cli_main(argc, argv); }
