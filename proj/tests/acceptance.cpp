// Acceptance suite: one pass/fail line per criterion. Exit 0 when every
// requested criterion passes, 1 otherwise. --nightly-gate exits 77 (skip)
// unless QSELECT_NIGHTLY=1 is set, keeping the overnight-scale criteria out
// of ordinary CI runs.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qsel/features.hpp"
#include "qsel/graph.hpp"
#include "qsel/gw.hpp"
#include "qsel/pipeline.hpp"
#include "qsel/qaoa.hpp"
#include "qsel/rng.hpp"
#include "qsel/selector.hpp"

using namespace qsel;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr double kGwRatioFloor = 0.85;       // criterion 2
constexpr double kP1MedianLow = 0.70;        // criterion 4
constexpr double kP1MedianHigh = 0.88;       // criterion 4
constexpr double kCrossoverBeatShare = 0.40; // criterion 5, at p=8
constexpr double kCvAccuracyFloor = 0.85;    // criterion 6
constexpr double kFixtureTol = 1e-9;         // criterion 8
constexpr double kFeatureRealTol = 1e-6;     // criterion 9

struct Outcome {
    bool pass = false;
    std::string detail;
};

double naive_max_cut(const Graph& g) {
    const int n = g.num_vertices();
    double best = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        double cost = 0.0;
        for (const Edge& e : g.edges()) {
            const int zu = (mask >> e.u) & 1 ? -1 : 1;
            const int zv = (mask >> e.v) & 1 ? -1 : 1;
            cost += e.w * (1 - zu * zv) / 2.0;
        }
        best = std::max(best, cost);
    }
    return best;
}

Graph random_connected(int n, double p, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0xACC));
    for (;;) {
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next_double() < p) e.push_back({i, j, 1.0});
        Graph g(n, e);
        if (g.is_connected() && g.num_edges() >= n) return g;
    }
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Depth-study dataset shared by criteria 4 and 5: 54 regenerated 4-regular
// instances (9 per n, n 11..16), warm-started depths 1..8. Staged in a fixed
// directory so the two criteria (and interrupted runs) reuse the cells.
ExperimentManifest depth_manifest() {
    ExperimentManifest m;
    m.n_min = 11;
    m.n_max = 16;
    m.instances_per_n = 9;
    m.degree = 4;
    m.depth_min = 1;
    m.depth_max = 8;
    m.random_starts = 10;
    m.evals_per_start = 0; // 400 * 2p
    m.gw_projections = 1000;
    m.sample_count = 1000;
    m.seed_root = 2024;
    m.threads = 1;
    m.expensive_features = false;
    m.out_dir = "acceptance_depth_study";
    return m;
}

// Full ML dataset for criteria 6 and 7: >= 200 instances at p=10, n 11..20.
ExperimentManifest ml_manifest() {
    ExperimentManifest m;
    m.n_min = 11;
    m.n_max = 20;
    m.instances_per_n = 20;
    m.degree = 4;
    m.depth_min = 1;
    m.depth_max = 10;
    m.random_starts = 10;
    m.evals_per_start = 0;
    m.gw_projections = 1000;
    m.sample_count = 1000;
    m.seed_root = 4242;
    m.threads = 1;
    m.expensive_features = false;
    m.out_dir = "acceptance_ml_dataset";
    return m;
}

// --- criterion 1: oracle correctness -----------------------------------

Outcome criterion1() {
    for (int k = 0; k < 200; ++k) {
        const int n = 6 + k % 7; // 6..12
        const Graph g = random_connected(n, 0.4, 100 + k);
        const double fast = brute_force_max(g).cost;
        const double naive = naive_max_cut(g);
        if (fast != naive)
            return {false, "mismatch on graph " + std::to_string(k) + ": " +
                               std::to_string(fast) + " vs " + std::to_string(naive)};
    }
    return {true, "200 graphs, exact agreement with naive enumeration"};
}

// --- criterion 2: GW bound ---------------------------------------------

Outcome criterion2() {
    double worst = 1.0;
    int idx = 0;
    for (int k = 0; k < 50; ++k) {
        const int n = 11 + k % 6;
        const Graph g = generate_regular(n, 4, mix_seed(7, k));
        const double c_max = brute_force_max(g).cost;
        const GwStats st = estimate_gw(g, 1000, mix_seed(13, k));
        if (st.relaxed_cost < c_max - 1e-8)
            return {false, "C_rlx < C_max on instance " + std::to_string(k)};
        const double ratio = st.expected_cost / c_max;
        if (ratio < worst) {
            worst = ratio;
            idx = k;
        }
    }
    if (worst < kGwRatioFloor)
        return {false, "worst GW ratio " + std::to_string(worst) + " on instance " +
                           std::to_string(idx) + " below " + std::to_string(kGwRatioFloor)};
    return {true, "50 instances, worst expected ratio " + std::to_string(worst)};
}

// --- criterion 3: QAOA sanity ------------------------------------------

Outcome criterion3() {
    for (int k = 0; k < 20; ++k) {
        const Graph g = generate_regular(10 + k % 4, 4, mix_seed(5, k));
        QaoaAngles zero;
        zero.gammas.assign(1, 0.0);
        zero.betas.assign(1, 0.0);
        if (std::abs(expected_cost(g, zero) - g.num_edges() / 2.0) > 1e-9)
            return {false, "zero-angle expectation off on graph " + std::to_string(k)};
    }
    // state norm at p = 10
    const Graph g = generate_regular(12, 4, 3);
    Rng rng(17);
    QaoaAngles a;
    for (int i = 0; i < 10; ++i) {
        a.gammas.push_back(6.283185307179586 * rng.next_double());
        a.betas.push_back(3.141592653589793 * rng.next_double());
    }
    const auto amp = apply_qaoa_circuit(g, a);
    double norm2 = 0.0;
    for (const auto& c : amp) norm2 += std::norm(c);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9)
        return {false, "state norm drifted at p=10: " + std::to_string(std::sqrt(norm2))};
    return {true, "zero-angle F_p = |E|/2 on 20 graphs; norm preserved at p=10"};
}

// --- criteria 4 and 5: depth study -------------------------------------

const SummaryTable& depth_study() {
    static const SummaryTable table = [] {
        const ExperimentManifest m = depth_manifest();
        if (run_experiment(m) != 0) throw numerical_error("depth study had instance failures");
        return summarize(m.out_dir);
    }();
    return table;
}

Outcome criterion4() {
    const SummaryTable& t = depth_study();
    std::vector<double> medians;
    for (const auto& row : t.rows)
        if (row.depth != "GW") medians.push_back(row.median_ratio);
    if (medians.size() < 6) return {false, "depth study is missing depths"};
    for (int p = 1; p < 6; ++p)
        if (medians[p] < medians[p - 1] - 1e-12)
            return {false, "median ratio decreased from p=" + std::to_string(p) + " to p=" +
                               std::to_string(p + 1)};
    if (medians[0] < kP1MedianLow || medians[0] > kP1MedianHigh)
        return {false, "p=1 median " + std::to_string(medians[0]) + " outside [" +
                           std::to_string(kP1MedianLow) + ", " + std::to_string(kP1MedianHigh) + "]"};
    return {true, "median ratio non-decreasing over p=1..6; p=1 median " +
                      std::to_string(medians[0])};
}

Outcome criterion5() {
    const SummaryTable& t = depth_study();
    for (const auto& row : t.rows)
        if (row.depth == "8") {
            if (row.pct_qaoa_beats_gw < 100.0 * kCrossoverBeatShare)
                return {false, "QAOA beat GW on only " + std::to_string(row.pct_qaoa_beats_gw) +
                                   "% of instances at p=8"};
            return {true, "QAOA beat GW on " + std::to_string(row.pct_qaoa_beats_gw) +
                              "% of instances at p=8"};
        }
    return {false, "depth study has no p=8 row"};
}

// --- criteria 6 and 7: full ML dataset ---------------------------------

const LabeledDataset& ml_dataset() {
    static const LabeledDataset ds = [] {
        const ExperimentManifest m = ml_manifest();
        if (run_experiment(m) != 0) throw numerical_error("ML dataset had instance failures");
        return load_labeled_dataset(m.out_dir);
    }();
    return ds;
}

Outcome criterion6() {
    const LabeledDataset& ds = ml_dataset();
    if (ds.rows.size() < 200)
        return {false, "dataset has only " + std::to_string(ds.rows.size()) + " instances"};
    const CvReport rep = cross_validate(ds, default_spec_crit1(), 4, 1);
    if (rep.mean_balanced_accuracy < kCvAccuracyFloor)
        return {false, "cross-validated balanced accuracy " +
                           std::to_string(rep.mean_balanced_accuracy) + " below " +
                           std::to_string(kCvAccuracyFloor)};
    return {true, "4-fold balanced accuracy " + std::to_string(rep.mean_balanced_accuracy)};
}

Outcome criterion7() {
    const LabeledDataset& ds = ml_dataset();
    const PipelineSpec spec = default_spec_crit1(); // columns {18, 19}
    const FittedPipeline model = fit_pipeline(spec, ds);
    const Matrix x = ds.feature_matrix(spec.feature_indices);
    const auto y = ds.labels(1);
    const auto imp = permutation_importance(model, x, y, 10, 3);
    const double expected_drop = imp[0].mean_drop; // expected_costGW_over_sdp_cost
    const double std_drop = imp[1].mean_drop;      // std_costGW_over_sdp_cost
    if (!(std_drop > expected_drop))
        return {false, "importance ordering violated: std drop " + std::to_string(std_drop) +
                           " <= expected-cost drop " + std::to_string(expected_drop)};
    return {true, "std-feature drop " + std::to_string(std_drop) + " > expected-cost drop " +
                      std::to_string(expected_drop)};
}

// --- criterion 8: ML parity fixtures -----------------------------------

bool near(double a, double b) { return std::abs(a - b) <= kFixtureTol; }

Outcome criterion8() {
    std::vector<std::string> failures;
    const auto expect = [&](bool ok, const char* what) {
        if (!ok) failures.push_back(what);
    };

    // k-NN (Manhattan, uniform weights)
    {
        auto knn = make_knn(3);
        knn->fit({{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}}, {0, 1, 1, 0});
        expect(near(knn->predict_proba({{0.2, 0.2}})[0][1], 2.0 / 3.0), "knn proba");
    }
    // multinomial NB: posterior 11/12 (see unit fixtures for the arithmetic)
    {
        auto nb = make_multinomial_nb(0.1);
        nb->fit({{1.0, 0.0}, {0.0, 1.0}}, {0, 1});
        expect(near(nb->predict_proba({{1.0, 0.0}})[0][0], 11.0 / 12.0), "multinomial nb");
    }
    // bernoulli NB: posterior 121/221
    {
        auto nb = make_bernoulli_nb(10.0);
        nb->fit({{1.0, 0.0}, {0.0, 1.0}}, {0, 1});
        expect(near(nb->predict_proba({{1.0, 0.0}})[0][0], 121.0 / 221.0), "bernoulli nb");
    }
    // gaussian NB: symmetric midpoint is exactly 1/2
    {
        auto nb = make_gaussian_nb();
        nb->fit({{0.0}, {1.0}, {10.0}, {11.0}}, {0, 0, 1, 1});
        expect(near(nb->predict_proba({{5.5}})[0][0], 0.5), "gaussian nb");
    }
    // depth-2 entropy tree separates a 1-D threshold
    {
        auto dt = make_decision_tree(2, 1, 2);
        dt->fit({{0.0}, {1.0}, {2.0}, {3.0}}, {0, 0, 1, 1});
        expect(dt->predict({{0.5}})[0] == 0 && dt->predict({{2.5}})[0] == 1, "decision tree");
        expect(near(dt->predict_proba({{0.5}})[0][0], 1.0), "decision tree proba");
    }
    // balanced accuracy
    expect(near(balanced_accuracy({1, 1, 0, 0}, {1, 0, 0, 0}), 0.75), "balanced accuracy");
    // stratified folds
    {
        std::vector<int> y;
        for (int i = 0; i < 24; ++i) y.push_back(i % 3 == 0 ? 1 : 0);
        const auto folds = stratified_fold_assignment(y, 4, 7);
        std::vector<int> pos(4, 0), neg(4, 0);
        for (std::size_t i = 0; i < y.size(); ++i) (y[i] ? pos : neg)[folds[i]]++;
        bool ok = true;
        for (int f = 0; f < 4; ++f) ok = ok && pos[f] == 2 && neg[f] == 4;
        expect(ok, "stratified folds");
    }
    // ANOVA F-score: hand value 8 on {0,1 | 2,3}
    expect(near(f_classif({{0.0}, {1.0}, {2.0}, {3.0}}, {0, 0, 1, 1})[0], 8.0), "f_classif");
    // binarizer (strict threshold)
    {
        const Matrix b = binarize({{0.2, 0.25, 0.3}}, 0.25);
        expect(b[0][0] == 0.0 && b[0][1] == 0.0 && b[0][2] == 1.0, "binarizer");
    }
    // L2 normalizer
    {
        const Matrix l = l2_normalize_rows({{3.0, 4.0}});
        expect(near(l[0][0], 0.6) && near(l[0][1], 0.8), "l2 normalizer");
    }
    // both pipelines on separable data; constant predictor is exactly 0.5
    {
        Matrix x;
        std::vector<int> y;
        Rng rng(5);
        for (int i = 0; i < 8; ++i) {
            x.push_back({0.1 + 0.02 * rng.next_double(), 0.1 + 0.02 * rng.next_double()});
            y.push_back(0);
            x.push_back({0.9 + 0.02 * rng.next_double(), 0.9 + 0.02 * rng.next_double()});
            y.push_back(1);
        }
        const FittedPipeline p1 = fit_pipeline_crit1(x, y);
        const FittedPipeline p2 = fit_pipeline_crit2(x, y);
        expect(near(balanced_accuracy(y, p1.predict(x)), 1.0), "criterion-1 pipeline");
        expect(near(balanced_accuracy(y, p2.predict(x)), 1.0), "criterion-2 pipeline");
        const std::vector<int> constant(y.size(), 0);
        expect(balanced_accuracy(y, constant) == 0.5, "constant predictor");
    }

    if (!failures.empty()) {
        std::string msg = "fixture failures:";
        for (const auto& f : failures) msg += " " + f;
        return {false, msg};
    }
    return {true, "all hand-computed fixtures reproduced within 1e-9"};
}

// --- criterion 9: feature parity ---------------------------------------

// Independent naive oracles (identical to the unit-test oracles; duplicated
// here so the acceptance binary stands alone).
std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
    std::vector<std::uint32_t> nb(g.num_vertices(), 0);
    for (const Edge& e : g.edges()) {
        nb[e.u] |= 1u << e.v;
        nb[e.v] |= 1u << e.u;
    }
    return nb;
}

std::uint32_t oracle_closure(const Graph& g, std::uint32_t filled) {
    const int n = g.num_vertices();
    const auto nb = neighbor_masks(g);
    const std::uint32_t all = (1u << n) - 1;
    bool changed = true;
    while (changed && filled != all) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!(filled >> v & 1)) continue;
            const std::uint32_t unfilled = nb[v] & ~filled;
            if (unfilled && std::popcount(unfilled) == 1) {
                filled |= unfilled;
                changed = true;
            }
        }
    }
    return filled;
}

Outcome criterion9() {
    for (int k = 0; k < 30; ++k) {
        const int n = 6 + k % 5; // 6..10, keeping the log features well defined
        const Graph g = k % 3 == 0 ? generate_regular(n, 4, 900 + k)
                                   : random_connected(n, 0.5, 900 + k);
        const auto nb = neighbor_masks(g);
        const std::uint32_t all = (1u << n) - 1;

        // set numbers by exhaustive subsets
        int mis = 0, dom = n, zf = n, pd = n;
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            bool indep = true;
            for (const Edge& e : g.edges())
                if ((s >> e.u & 1) && (s >> e.v & 1)) indep = false;
            if (indep) mis = std::max(mis, std::popcount(s));
            if (s) {
                std::uint32_t covered = s, powered = 0;
                for (int v = 0; v < n; ++v)
                    if (s >> v & 1) {
                        covered |= nb[v];
                        powered |= nb[v] | (1u << v);
                    }
                if (covered == all) dom = std::min(dom, std::popcount(s));
                if (oracle_closure(g, s) == all) zf = std::min(zf, std::popcount(s));
                if (oracle_closure(g, powered) == all) pd = std::min(pd, std::popcount(s));
            }
        }
        // maximum matching by exhaustive edge subsets
        int match = 0;
        const int m = g.num_edges();
        for (std::uint32_t s = 0; s < (1u << m); ++s) {
            std::uint32_t used = 0;
            bool ok = true;
            for (int i = 0; i < m && ok; ++i)
                if (s >> i & 1) {
                    const std::uint32_t pair = (1u << g.edges()[i].u) | (1u << g.edges()[i].v);
                    if (used & pair) ok = false;
                    used |= pair;
                }
            if (ok) match = std::max(match, std::popcount(s));
        }
        // diameter by Floyd-Warshall
        std::vector<std::vector<int>> dist(n, std::vector<int>(n, 1 << 20));
        for (int i = 0; i < n; ++i) dist[i][i] = 0;
        for (const Edge& e : g.edges()) dist[e.u][e.v] = dist[e.v][e.u] = 1;
        for (int kk = 0; kk < n; ++kk)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    dist[i][j] = std::min(dist[i][j], dist[i][kk] + dist[kk][j]);
        int diam = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) diam = std::max(diam, dist[i][j]);

        if (independence_number(g) != mis) return {false, "independence mismatch"};
        if (matching_number(g) != match) return {false, "matching mismatch"};
        if (diameter(g) != diam) return {false, "diameter mismatch"};
        if (domination_number(g) != dom) return {false, "domination mismatch"};
        if (zero_forcing_number(g) != zf) return {false, "zero forcing mismatch"};
        if (power_domination_number(g) != pd) return {false, "power domination mismatch"};

        // spectral features against a dense recomputation
        const SpectrumReport spec = spectrum(g);
        FeatureVector f;
        spectral_features(g, spec, f);
        const double deg = g.max_degree();
        const double logs[5] = {f.log_norm_laplacian_ev1, f.log_norm_laplacian_ev2,
                                f.log_norm_laplacian_ev3, f.log_norm_laplacian_ev4,
                                f.log_norm_laplacian_ev5};
        for (int i = 0; i < 5; ++i)
            if (std::abs(logs[i] - std::log(spec.laplacian_eigenvalues[i] / deg)) > kFeatureRealTol)
                return {false, "spectral log mismatch"};
        if (std::abs(f.spectral_gap - spec.laplacian_eigenvalues[n - 2]) > kFeatureRealTol)
            return {false, "spectral gap mismatch"};
        if (std::abs(f.density - 2.0 * g.num_edges() / (double(n) * (n - 1))) > kFeatureRealTol)
            return {false, "density mismatch"};

        // GW-derived fractions against an independent count
        const SdpSolution sol = solve_sdp(g, 1e-8, 10000, 31 + k);
        const GwStats st = project_stats(g, sol, 300, 7 + k);
        gw_features(sol, st, g, f);
        int positive = 0, close1 = 0, close3 = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                const double x = sol.cholesky_lower[std::size_t(i) * n + j];
                positive += x > 0.0;
                close1 += std::abs(x) < 0.1;
                close3 += std::abs(x) < 0.001;
            }
        const double total = n * (n + 1) / 2.0;
        if (std::abs(f.percent_positive_lower_part_relaxation_solution - positive / total) >
                kFeatureRealTol ||
            std::abs(f.percent_close1_lower_part_relaxation_solution - close1 / total) >
                kFeatureRealTol ||
            std::abs(f.percent_close3_lower_part_relaxation_solution - close3 / total) >
                kFeatureRealTol)
            return {false, "cholesky fraction mismatch"};
        if (std::abs(f.percent_cut - sol.relaxed_cost / g.num_edges()) > kFeatureRealTol)
            return {false, "percent_cut mismatch"};
        if (std::abs(f.expected_costGW_over_sdp_cost - st.expected_cost / sol.relaxed_cost) >
                kFeatureRealTol ||
            std::abs(f.std_costGW_over_sdp_cost - st.std_cost / sol.relaxed_cost) > kFeatureRealTol)
            return {false, "GW ratio feature mismatch"};
    }
    return {true, "all 20 features match naive oracles on 30 graphs"};
}

// --- criterion 10: determinism -----------------------------------------

Outcome criterion10() {
    ExperimentManifest m;
    m.n_min = 8;
    m.n_max = 9;
    m.instances_per_n = 2;
    m.degree = 4;
    m.depth_min = 1;
    m.depth_max = 2;
    m.random_starts = 3;
    m.evals_per_start = 120;
    m.gw_projections = 200;
    m.sample_count = 200;
    m.seed_root = 77;
    m.threads = 1;
    m.out_dir = "acceptance_smoke";

    const auto slurp_all = [&]() {
        std::string all;
        for (const char* name : {"gw.csv", "runs.csv", "features.csv", "labels.csv", "summary.csv"}) {
            std::ifstream f(fs::path(m.out_dir) / name);
            std::stringstream ss;
            ss << f.rdbuf();
            all += ss.str();
            all += '\0';
        }
        return all;
    };

    fs::remove_all(m.out_dir);
    if (run_experiment(m) != 0) return {false, "first smoke run had failures"};
    const std::string first = slurp_all();
    fs::remove_all(m.out_dir);
    if (run_experiment(m) != 0) return {false, "second smoke run had failures"};
    const std::string second = slurp_all();
    fs::remove_all(m.out_dir);
    if (first != second) return {false, "smoke run CSVs differ between runs"};
    return {true, "two smoke runs produced byte-identical CSVs"};
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> criteria;
    bool nightly_gate = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criteria") == 0 && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string tok;
            while (std::getline(ss, tok, ',')) criteria.push_back(std::stoi(tok));
        } else if (std::strcmp(argv[i], "--nightly-gate") == 0) {
            nightly_gate = true;
        } else {
            std::cerr << "usage: acceptance [--criteria 1,2,...] [--nightly-gate]\n";
            return 1;
        }
    }
    if (criteria.empty()) criteria = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

    if (nightly_gate) {
        const char* env = std::getenv("QSELECT_NIGHTLY");
        if (env == nullptr || std::string(env) != "1") {
            std::cout << "skipped: overnight-scale criteria run only with QSELECT_NIGHTLY=1\n";
            return 77;
        }
    }

    Outcome (*const table[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                  criterion6, criterion7, criterion8, criterion9, criterion10};
    bool all_pass = true;
    for (int c : criteria) {
        if (c < 1 || c > 10) {
            std::cerr << "unknown criterion " << c << "\n";
            return 1;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = table[c - 1]();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        std::cout << "criterion " << c << ": " << (out.pass ? "PASS" : "FAIL") << " (" << secs
                  << "s) — " << out.detail << "\n";
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
