#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "qsel/pipeline.hpp"
#include "qsel/selector.hpp"

using namespace qsel;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

ExperimentManifest smoke_manifest(const std::string& dir) {
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
    m.seed_root = 11;
    m.threads = 1;
    m.expensive_features = true;
    m.out_dir = dir;
    return m;
}

const ExperimentManifest& shared_run() {
    static const ExperimentManifest m = [] {
        ExperimentManifest manifest = smoke_manifest("/tmp/qsel_smoke");
        fs::remove_all(manifest.out_dir);
        REQUIRE(run_experiment(manifest) == 0);
        return manifest;
    }();
    return m;
}

} // namespace

TEST_CASE("manifest json round trip and hashing") {
    ExperimentManifest m = smoke_manifest("x");
    const ExperimentManifest back = ExperimentManifest::from_json(m.to_json());
    CHECK(back.to_json() == m.to_json());
    CHECK(back.hash() == m.hash());
    CHECK(m.hash().size() == 16);
    ExperimentManifest other = m;
    other.seed_root = 12;
    CHECK(other.hash() != m.hash());
    CHECK_THROWS_AS(ExperimentManifest::from_json("{\"n_min\": 3}"), std::invalid_argument);
}

TEST_CASE("smoke run produces the full artifact set") {
    const auto& m = shared_run();
    const fs::path dir(m.out_dir);
    for (const char* name : {"manifest.json", "instances.json", "gw.csv", "runs.csv",
                             "features.csv", "features_schema.json", "labels.csv", "summary.csv"})
        CHECK(fs::exists(dir / name));

    const auto runs = read_runs_csv((dir / "runs.csv").string());
    CHECK(runs.size() == 8); // 4 instances x 2 depths
    for (const auto& r : runs) {
        CHECK(r.ratio > 0.0);
        CHECK(r.ratio <= 1.0 + 1e-9);
        CHECK(r.sample_std >= 0.0);
        CHECK(static_cast<int>(r.angles.gammas.size()) == r.p);
        CHECK(static_cast<int>(r.angles.betas.size()) == r.p);
    }
    const auto gw = read_gw_csv((dir / "gw.csv").string());
    CHECK(gw.size() == 4);
    for (const auto& g : gw) {
        CHECK(g.c_rlx >= g.c_max - 1e-8);
        CHECK(g.expected_cost <= g.c_rlx + 1e-6);
        CHECK(g.best_cost >= g.expected_cost - 1e-12);
    }
}

TEST_CASE("every artifact embeds the manifest hash") {
    const auto& m = shared_run();
    const fs::path dir(m.out_dir);
    for (const char* name : {"gw.csv", "runs.csv", "features.csv", "labels.csv", "summary.csv"}) {
        const std::string text = slurp(dir / name);
        CAPTURE(name);
        CHECK(text.find(m.hash()) != std::string::npos);
        CHECK(text.find(kToolVersion) != std::string::npos);
    }
}

TEST_CASE("labels are recomputable from runs and gw") {
    const auto& m = shared_run();
    const fs::path dir(m.out_dir);
    const auto runs = read_runs_csv((dir / "runs.csv").string());
    const auto gw = read_gw_csv((dir / "gw.csv").string());
    const LabeledDataset ds = load_labeled_dataset(m.out_dir);
    CHECK(ds.rows.size() == 4);
    for (const auto& row : ds.rows) {
        const auto run = std::find_if(runs.begin(), runs.end(), [&](const RunRecord& r) {
            return r.instance_id == row.instance_id && r.p == m.depth_max;
        });
        const auto g = std::find_if(gw.begin(), gw.end(), [&](const GwRecord& r) {
            return r.instance_id == row.instance_id;
        });
        REQUIRE(run != runs.end());
        REQUIRE(g != gw.end());
        CHECK(row.qaoa_ratio == doctest::Approx(run->ratio).epsilon(1e-10));
        CHECK(row.gw_ratio == doctest::Approx(g->ratio).epsilon(1e-10));
        CHECK(row.label_crit1 == label_criterion1(row.qaoa_ratio, row.gw_ratio));
        CHECK(row.label_crit2 == label_criterion2(row.qaoa_ratio, row.gw_ratio));
        CHECK(row.features.density > 0.0);
        CHECK(row.p_used == m.depth_max);
    }
}

TEST_CASE("summary quartiles match an independent recomputation") {
    const auto& m = shared_run();
    const SummaryTable table = summarize(m.out_dir);
    REQUIRE(table.rows.size() == 3); // depths 1, 2 plus the GW row
    CHECK(table.rows.back().depth == "GW");

    const auto runs = read_runs_csv((fs::path(m.out_dir) / "runs.csv").string());
    for (const auto& row : table.rows) {
        if (row.depth == "GW") continue;
        std::vector<double> ratios;
        for (const auto& r : runs)
            if (std::to_string(r.p) == row.depth) ratios.push_back(r.ratio);
        std::sort(ratios.begin(), ratios.end());
        REQUIRE(ratios.size() == 4);
        CHECK(row.min_ratio == doctest::Approx(ratios.front()).epsilon(1e-12));
        CHECK(row.max_ratio == doctest::Approx(ratios.back()).epsilon(1e-12));
        CHECK(row.median_ratio == doctest::Approx(0.5 * (ratios[1] + ratios[2])).epsilon(1e-12));
        CHECK(row.min_ratio <= row.q1);
        CHECK(row.q1 <= row.median_ratio);
        CHECK(row.median_ratio <= row.q3);
        CHECK(row.q3 <= row.max_ratio);
    }
}

TEST_CASE("rerun on a complete directory is a no-op with identical files") {
    const auto& m = shared_run();
    const fs::path dir(m.out_dir);
    const std::string runs_before = slurp(dir / "runs.csv");
    const std::string gw_before = slurp(dir / "gw.csv");
    REQUIRE(run_experiment(m) == 0);
    CHECK(slurp(dir / "runs.csv") == runs_before);
    CHECK(slurp(dir / "gw.csv") == gw_before);
}

TEST_CASE("fresh reruns are byte-identical") {
    const auto& m = shared_run();
    ExperimentManifest again = m;
    again.out_dir = "/tmp/qsel_smoke_b";
    fs::remove_all(again.out_dir);
    REQUIRE(run_experiment(again) == 0);
    for (const char* name : {"gw.csv", "runs.csv", "features.csv", "labels.csv", "summary.csv"}) {
        CAPTURE(name);
        // the manifests differ only in out_dir, which changes the embedded
        // hash line; compare everything after it
        auto body = [](std::string text) {
            return text.substr(text.find('\n') + 1);
        };
        CHECK(body(slurp(fs::path(again.out_dir) / name)) ==
              body(slurp(fs::path(m.out_dir) / name)));
    }
    fs::remove_all(again.out_dir);
}

TEST_CASE("warm start keeps ratios non-decreasing in depth on the smoke set") {
    const auto& m = shared_run();
    const auto runs = read_runs_csv((fs::path(m.out_dir) / "runs.csv").string());
    for (const auto& a : runs)
        for (const auto& b : runs)
            if (a.instance_id == b.instance_id && a.p + 1 == b.p)
                CHECK(b.ratio >= a.ratio - 1e-9);
}

TEST_CASE("trivial summaries") {
    // single instance, single depth: min = median = max = that ratio
    ExperimentManifest m = smoke_manifest("/tmp/qsel_smoke_single");
    m.n_max = m.n_min;
    m.instances_per_n = 1;
    m.depth_max = 1;
    fs::remove_all(m.out_dir);
    REQUIRE(run_experiment(m) == 0);
    const SummaryTable t = summarize(m.out_dir);
    CHECK(t.rows[0].min_ratio == doctest::Approx(t.rows[0].median_ratio));
    CHECK(t.rows[0].median_ratio == doctest::Approx(t.rows[0].max_ratio));
    fs::remove_all(m.out_dir);
}
