#ifndef QSEL_PIPELINE_HPP
#define QSEL_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsel/qaoa.hpp"
#include "qsel/selector.hpp"

namespace qsel {

inline constexpr const char* kToolVersion = "qselect 0.1.0";

struct ExperimentManifest {
    int n_min = 8;
    int n_max = 10;
    int instances_per_n = 3;
    int degree = 4;
    int depth_min = 1;
    int depth_max = 3;
    int random_starts = 10;
    int evals_per_start = 0; // 0 means 400 * 2p per start
    int gw_projections = 1000;
    int sample_count = 1000; // shots for the per-depth sample std
    std::uint64_t seed_root = 1;
    int threads = 0; // 0 means hardware concurrency
    bool expensive_features = true;
    std::string out_dir = "dataset";

    std::string to_json() const;
    static ExperimentManifest from_json(const std::string& text);
    static ExperimentManifest load(const std::string& path);
    // FNV-1a over the canonical JSON dump; stamped into every output file.
    std::string hash() const;
};

struct RunRecord {
    std::string instance_id;
    int p = 0;
    QaoaAngles angles;
    double f_p = 0.0;
    double ratio = 0.0;
    double sample_std = 0.0;
    long evaluations = 0;
    std::uint64_t seed = 0;
};

struct GwRecord {
    std::string instance_id;
    double expected_cost = 0.0;
    double std_cost = 0.0;
    double best_cost = 0.0;
    double c_rlx = 0.0;
    double c_max = 0.0;
    double ratio = 0.0;
};

struct SummaryRow {
    std::string depth; // "1".."p" or "GW"
    double min_ratio = 0.0;
    double q1 = 0.0;
    double median_ratio = 0.0;
    double q3 = 0.0;
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
    double pct_qaoa_beats_gw = 0.0; // percentage; 0 for the GW row
    double mean_sample_std = 0.0;
};

struct SummaryTable {
    std::vector<SummaryRow> rows;
    double log_fit_a = 0.0;
    double log_fit_b = 0.0;
    double crossing_depth = 0.0;
};

// End-to-end dataset generation: graphs, C_max, GW, QAOA depth schedule with
// the warm-start protocol, features, labels, summary. Completed
// (instance, depth) cells found in an existing runs.csv are not recomputed.
// Returns the number of per-instance failures (logged and skipped).
int run_experiment(const ExperimentManifest& manifest);

SummaryTable summarize(const std::string& dataset_dir);

// Dataset directory readers (CSV with one '#'-prefixed provenance line).
std::vector<RunRecord> read_runs_csv(const std::string& path);
std::vector<GwRecord> read_gw_csv(const std::string& path);
LabeledDataset load_labeled_dataset(const std::string& dataset_dir);

int cli_main(int argc, char** argv);

} // namespace qsel

#endif
