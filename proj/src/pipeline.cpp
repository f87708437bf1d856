#include "qsel/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "qsel/features.hpp"
#include "qsel/graph.hpp"
#include "qsel/gw.hpp"
#include "qsel/rng.hpp"
#include <nlohmann/json.hpp>

namespace qsel {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string join_angles(const std::vector<double>& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ';';
        out += fmt(a[i]);
    }
    return out;
}

std::vector<double> split_angles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) out.push_back(std::stod(tok));
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

// All CSV files open with one '#' provenance line before the header.
std::ofstream open_csv(const fs::path& path, const std::string& manifest_hash) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << "# manifest=" << manifest_hash << " version=" << kToolVersion << "\n";
    return f;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path, bool skip_header = true) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header_seen = !skip_header;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

std::vector<std::string> read_csv_header(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read " + path);
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        return split_csv_line(line);
    }
    throw std::invalid_argument("no header row in " + path);
}

// Run fn(i) for i in [0, count) over a small worker pool; exceptions are
// re-thrown on the caller thread after all futures settle.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::future<void>> futures;
    const int pool = std::min<int>(threads, static_cast<int>(count));
    futures.reserve(pool);
    for (int t = 0; t < pool; ++t) futures.push_back(std::async(std::launch::async, worker));
    for (auto& f : futures) f.get();
}

struct Quartiles {
    double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0, mean = 0.0;
};

Quartiles quartiles(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("empty sample");
    std::sort(v.begin(), v.end());
    const auto at = [&v](double q) {
        const double pos = q * (static_cast<double>(v.size()) - 1.0);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, v.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return v[lo] * (1.0 - frac) + v[hi] * frac;
    };
    Quartiles out;
    out.min = v.front();
    out.q1 = at(0.25);
    out.median = at(0.5);
    out.q3 = at(0.75);
    out.max = v.back();
    out.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    return out;
}

} // namespace

std::string ExperimentManifest::to_json() const {
    json j;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["instances_per_n"] = instances_per_n;
    j["degree"] = degree;
    j["depth_min"] = depth_min;
    j["depth_max"] = depth_max;
    j["random_starts"] = random_starts;
    j["evals_per_start"] = evals_per_start;
    j["gw_projections"] = gw_projections;
    j["sample_count"] = sample_count;
    j["seed_root"] = seed_root;
    j["threads"] = threads;
    j["expensive_features"] = expensive_features;
    j["out_dir"] = out_dir;
    return j.dump(2);
}

ExperimentManifest ExperimentManifest::from_json(const std::string& text) {
    const json j = json::parse(text);
    ExperimentManifest m;
    m.n_min = j.value("n_min", m.n_min);
    m.n_max = j.value("n_max", m.n_max);
    m.instances_per_n = j.value("instances_per_n", m.instances_per_n);
    m.degree = j.value("degree", m.degree);
    m.depth_min = j.value("depth_min", m.depth_min);
    m.depth_max = j.value("depth_max", m.depth_max);
    m.random_starts = j.value("random_starts", m.random_starts);
    m.evals_per_start = j.value("evals_per_start", m.evals_per_start);
    m.gw_projections = j.value("gw_projections", m.gw_projections);
    m.sample_count = j.value("sample_count", m.sample_count);
    m.seed_root = j.value("seed_root", m.seed_root);
    m.threads = j.value("threads", m.threads);
    m.expensive_features = j.value("expensive_features", m.expensive_features);
    m.out_dir = j.value("out_dir", m.out_dir);
    if (m.n_min < 5 || m.n_max < m.n_min || m.instances_per_n < 1 || m.depth_min < 1 ||
        m.depth_max < m.depth_min || m.gw_projections < 1)
        throw std::invalid_argument("invalid manifest parameters");
    return m;
}

ExperimentManifest ExperimentManifest::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read manifest " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return from_json(ss.str());
}

std::string ExperimentManifest::hash() const {
    // FNV-1a 64 over the canonical dump.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_json()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

struct Instance {
    std::string id;
    Graph graph;
    double c_max = 0.0;
    GwStats gw;
    SdpSolution sdp;
    FeatureVector features;
    bool failed = false;
    std::string error;
};

std::string instance_name(int n, int idx) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "n%02d_i%02d", n, idx);
    return buf;
}

} // namespace

int run_experiment(const ExperimentManifest& manifest) {
    const fs::path dir(manifest.out_dir);
    fs::create_directories(dir);
    const std::string hash = manifest.hash();
    {
        std::ofstream mf(dir / "manifest.json");
        mf << manifest.to_json() << "\n";
    }

    const int threads = manifest.threads > 0
                            ? manifest.threads
                            : std::max(1u, std::thread::hardware_concurrency());

    // Stage 1: graphs, exact optima, GW, features (instance-parallel).
    std::vector<Instance> instances;
    for (int n = manifest.n_min; n <= manifest.n_max; ++n)
        for (int i = 0; i < manifest.instances_per_n; ++i) {
            const std::uint64_t gseed = mix_seed(manifest.seed_root, static_cast<std::uint64_t>(n) * 1000 + i);
            instances.push_back({instance_name(n, i),
                                 generate_regular(n, manifest.degree, gseed),
                                 0.0,
                                 {},
                                 {},
                                 {},
                                 false,
                                 {}});
        }

    parallel_for(instances.size(), threads, [&](std::size_t i) {
        Instance& inst = instances[i];
        try {
            inst.c_max = brute_force_max(inst.graph).cost;
            const std::uint64_t gw_seed = mix_seed(manifest.seed_root, 0x61A0 + i);
            inst.sdp = solve_sdp(inst.graph, 1e-8, 10000, gw_seed);
            inst.gw = project_stats(inst.graph, inst.sdp, manifest.gw_projections, gw_seed);
            spectral_features(inst.graph, spectrum(inst.graph), inst.features);
            if (manifest.expensive_features) set_number_features(inst.graph, inst.features);
            gw_features(inst.sdp, inst.gw, inst.graph, inst.features);
        } catch (const std::exception& ex) {
            inst.failed = true;
            inst.error = ex.what();
        }
    });

    int failures = 0;
    std::vector<Instance*> live;
    for (auto& inst : instances) {
        if (inst.failed) {
            ++failures;
            std::cerr << "instance " << inst.id << " failed: " << inst.error << "\n";
        } else {
            live.push_back(&inst);
        }
    }
    if (live.empty()) throw numerical_error("all instances failed");

    // instances.json + gw.csv + features.csv (+ schema sidecar).
    {
        json arr = json::array();
        for (const Instance* inst : live)
            arr.push_back({{"id", inst->id},
                           {"graph", json::parse(inst->graph.to_json())},
                           {"c_max", inst->c_max}});
        json j{{"manifest", hash}, {"version", kToolVersion}, {"instances", arr}};
        std::ofstream f(dir / "instances.json");
        f << j.dump(2) << "\n";
    }
    {
        auto f = open_csv(dir / "gw.csv", hash);
        f << "instance_id,gw_expected_cost,gw_std_cost,gw_best_cost,c_rlx,c_max,gw_ratio\n";
        for (const Instance* inst : live)
            f << inst->id << ',' << fmt(inst->gw.expected_cost) << ',' << fmt(inst->gw.std_cost)
              << ',' << fmt(inst->gw.best_cost) << ',' << fmt(inst->gw.relaxed_cost) << ','
              << fmt(inst->c_max) << ',' << fmt(inst->gw.expected_cost / inst->c_max) << "\n";
    }
    {
        auto f = open_csv(dir / "features.csv", hash);
        f << "instance_id";
        for (const auto& name : FeatureVector::names()) f << ',' << name;
        f << "\n";
        for (const Instance* inst : live) {
            f << inst->id;
            for (double v : inst->features.values()) f << ',' << fmt(v);
            f << "\n";
        }
        std::ofstream schema(dir / "features_schema.json");
        json sj = json::parse(feature_schema_json());
        sj["expensive_omitted"] = !manifest.expensive_features;
        sj["manifest"] = hash;
        schema << sj.dump(2) << "\n";
    }

    // Stage 2: QAOA depth schedule with the warm-start protocol. Sequential
    // over instances by contract (the chain feeds each optimum forward).
    std::map<std::pair<std::string, int>, RunRecord> cells;
    const fs::path runs_path = dir / "runs.csv";
    if (fs::exists(runs_path))
        for (auto& rec : read_runs_csv(runs_path.string()))
            cells[{rec.instance_id, rec.p}] = rec;

    // Checkpoint after every depth so an interrupted run resumes from the
    // last completed (instance, p) cells instead of restarting the schedule.
    const auto write_runs = [&] {
        auto f = open_csv(runs_path, hash);
        f << "instance_id,p,gammas,betas,f_p,ratio,sample_std,evaluations,seed\n";
        for (const Instance* inst : live)
            for (int p = manifest.depth_min; p <= manifest.depth_max; ++p) {
                auto it = cells.find({inst->id, p});
                if (it == cells.end()) continue;
                const RunRecord& r = it->second;
                f << r.instance_id << ',' << r.p << ',' << join_angles(r.angles.gammas) << ','
                  << join_angles(r.angles.betas) << ',' << fmt(r.f_p) << ',' << fmt(r.ratio) << ','
                  << fmt(r.sample_std) << ',' << r.evaluations << ',' << r.seed << "\n";
            }
    };

    NelderMeadOptions nm_base;
    for (int p = manifest.depth_min; p <= manifest.depth_max; ++p) {
        NelderMeadOptions nm = nm_base;
        nm.max_evaluations =
            manifest.evals_per_start > 0 ? manifest.evals_per_start : 400 * 2 * p;

        std::vector<bool> fresh(live.size(), false);
        const QaoaAngles* chain = nullptr;
        for (std::size_t i = 0; i < live.size(); ++i) {
            Instance& inst = *live[i];
            auto it = cells.find({inst.id, p});
            if (it != cells.end()) {
                chain = &it->second.angles;
                continue;
            }
            QaoaSimulator sim(inst.graph);
            RunRecord rec;
            rec.instance_id = inst.id;
            rec.p = p;
            rec.seed = mix_seed(manifest.seed_root, 0x9A0A + i * 64 + p);
            double best_f = -1.0;
            QaoaAngles best_angles;
            long evals = 0;
            auto attempt = [&](const QaoaAngles& start) {
                const auto obj = [&sim](const std::vector<double>& x) {
                    return -sim.expected_cost(QaoaAngles::from_flat(x));
                };
                const auto r = nelder_mead(obj, start.zero_padded(p).flat(), nm);
                evals += r.evaluations;
                if (-r.f > best_f) {
                    best_f = -r.f;
                    best_angles = QaoaAngles::from_flat(r.x);
                }
            };
            if (p > manifest.depth_min) {
                auto prev = cells.find({inst.id, p - 1});
                if (prev != cells.end()) attempt(prev->second.angles);
            }
            if (chain != nullptr) attempt(*chain);
            // Random starts seed the chain only; later instances reuse the
            // zero-padded lower-depth optimum and the chained best angles.
            Rng rng(mix_seed(rec.seed, 0x0A7));
            const int starts = (chain == nullptr) ? std::max(1, manifest.random_starts) : 0;
            for (int s = 0; s < starts; ++s) {
                QaoaAngles a;
                a.gammas.resize(p);
                a.betas.resize(p);
                for (int k = 0; k < p; ++k) a.gammas[k] = 6.283185307179586 * rng.next_double();
                for (int k = 0; k < p; ++k) a.betas[k] = 3.141592653589793 * rng.next_double();
                attempt(a);
            }
            rec.angles = best_angles;
            rec.f_p = best_f;
            rec.ratio = best_f / inst.c_max;
            rec.evaluations = evals;
            auto slot = cells.insert_or_assign({inst.id, p}, std::move(rec));
            chain = &slot.first->second.angles;
            fresh[i] = true;
        }

        // Retry pass: freshly computed instances still behind GW reseed from
        // every other instance's optimum at this depth.
        for (std::size_t i = 0; i < live.size(); ++i) {
            if (!fresh[i]) continue;
            Instance& inst = *live[i];
            RunRecord& rec = cells[{inst.id, p}];
            const double gw_ratio = inst.gw.expected_cost / inst.c_max;
            if (rec.ratio > gw_ratio) continue;
            QaoaSimulator sim(inst.graph);
            for (std::size_t j = 0; j < live.size(); ++j) {
                if (j == i) continue;
                auto other = cells.find({live[j]->id, p});
                if (other == cells.end()) continue;
                const auto obj = [&sim](const std::vector<double>& x) {
                    return -sim.expected_cost(QaoaAngles::from_flat(x));
                };
                const auto r = nelder_mead(obj, other->second.angles.flat(), nm);
                rec.evaluations += r.evaluations;
                if (-r.f > rec.f_p) {
                    rec.f_p = -r.f;
                    rec.angles = QaoaAngles::from_flat(r.x);
                    rec.ratio = rec.f_p / inst.c_max;
                }
            }
        }

        // Sample std of C(z)/C_max for fresh cells.
        parallel_for(live.size(), threads, [&](std::size_t i) {
            if (!fresh[i]) return;
            Instance& inst = *live[i];
            RunRecord& rec = cells.find({inst.id, p})->second;
            const SampleStats st = QaoaSimulator(inst.graph)
                                       .sample_cut_distribution(rec.angles, manifest.sample_count,
                                                                mix_seed(rec.seed, 0x5704));
            rec.sample_std = st.stddev / inst.c_max;
        });
        write_runs();
    }

    write_runs();

    // labels.csv from the deepest runs.
    {
        auto f = open_csv(dir / "labels.csv", hash);
        f << "instance_id,label_crit1,label_crit2,qaoa_ratio,gw_ratio,n,p_used\n";
        for (const Instance* inst : live) {
            auto it = cells.find({inst->id, manifest.depth_max});
            if (it == cells.end()) continue;
            const double qr = it->second.ratio;
            const double gr = inst->gw.expected_cost / inst->c_max;
            f << inst->id << ',' << label_criterion1(qr, gr) << ',' << label_criterion2(qr, gr)
              << ',' << fmt(qr) << ',' << fmt(gr) << ',' << inst->graph.num_vertices() << ','
              << manifest.depth_max << "\n";
        }
    }

    // summary.csv.
    const SummaryTable table = summarize(manifest.out_dir);
    {
        auto f = open_csv(dir / "summary.csv", hash);
        f << "depth,min_ratio,q1,median_ratio,q3,max_ratio,mean_ratio,pct_qaoa_beats_gw,mean_sample_std\n";
        for (const auto& row : table.rows)
            f << row.depth << ',' << fmt(row.min_ratio) << ',' << fmt(row.q1) << ','
              << fmt(row.median_ratio) << ',' << fmt(row.q3) << ',' << fmt(row.max_ratio) << ','
              << fmt(row.mean_ratio) << ',' << fmt(row.pct_qaoa_beats_gw) << ','
              << fmt(row.mean_sample_std) << "\n";
        f << "# log_fit_a=" << fmt(table.log_fit_a) << " log_fit_b=" << fmt(table.log_fit_b)
          << " crossing_depth=" << fmt(table.crossing_depth) << "\n";
    }

    return failures;
}

std::vector<RunRecord> read_runs_csv(const std::string& path) {
    std::vector<RunRecord> out;
    for (const auto& cols : read_csv(path)) {
        if (cols.size() < 9) throw std::invalid_argument("malformed runs.csv row");
        RunRecord r;
        r.instance_id = cols[0];
        r.p = std::stoi(cols[1]);
        r.angles.gammas = split_angles(cols[2]);
        r.angles.betas = split_angles(cols[3]);
        r.f_p = std::stod(cols[4]);
        r.ratio = std::stod(cols[5]);
        r.sample_std = std::stod(cols[6]);
        r.evaluations = std::stol(cols[7]);
        r.seed = std::stoull(cols[8]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<GwRecord> read_gw_csv(const std::string& path) {
    std::vector<GwRecord> out;
    for (const auto& cols : read_csv(path)) {
        if (cols.size() < 7) throw std::invalid_argument("malformed gw.csv row");
        out.push_back({cols[0], std::stod(cols[1]), std::stod(cols[2]), std::stod(cols[3]),
                       std::stod(cols[4]), std::stod(cols[5]), std::stod(cols[6])});
    }
    return out;
}

SummaryTable summarize(const std::string& dataset_dir) {
    const fs::path dir(dataset_dir);
    const auto runs = read_runs_csv((dir / "runs.csv").string());
    const auto gw = read_gw_csv((dir / "gw.csv").string());
    if (runs.empty()) throw std::invalid_argument("no runs in dataset");

    std::map<std::string, const GwRecord*> gw_by_id;
    for (const auto& rec : gw) gw_by_id[rec.instance_id] = &rec;

    std::map<int, std::vector<const RunRecord*>> by_depth;
    for (const auto& rec : runs) by_depth[rec.p].push_back(&rec);

    // Every requested depth must cover the same instance set.
    const std::size_t expected = by_depth.begin()->second.size();
    for (const auto& [p, rows] : by_depth)
        if (rows.size() != expected)
            throw std::invalid_argument("dataset has a gap at depth " + std::to_string(p));

    SummaryTable table;
    std::vector<int> fit_depths;
    std::vector<double> fit_stds;
    for (const auto& [p, rows] : by_depth) {
        std::vector<double> ratios;
        double std_sum = 0.0;
        int beats = 0;
        for (const RunRecord* r : rows) {
            ratios.push_back(r->ratio);
            std_sum += r->sample_std;
            auto it = gw_by_id.find(r->instance_id);
            if (it == gw_by_id.end()) throw std::invalid_argument("gw.csv missing " + r->instance_id);
            if (r->ratio > it->second->ratio) ++beats;
        }
        const Quartiles q = quartiles(ratios);
        SummaryRow row;
        row.depth = std::to_string(p);
        row.min_ratio = q.min;
        row.q1 = q.q1;
        row.median_ratio = q.median;
        row.q3 = q.q3;
        row.max_ratio = q.max;
        row.mean_ratio = q.mean;
        row.pct_qaoa_beats_gw = 100.0 * beats / static_cast<double>(rows.size());
        row.mean_sample_std = std_sum / static_cast<double>(rows.size());
        table.rows.push_back(row);
        if (row.mean_sample_std > 0.0) {
            fit_depths.push_back(p);
            fit_stds.push_back(row.mean_sample_std);
        }
    }

    std::vector<double> gw_ratios, gw_stds;
    for (const auto& rec : gw) {
        gw_ratios.push_back(rec.ratio);
        gw_stds.push_back(rec.std_cost / rec.c_max);
    }
    const Quartiles q = quartiles(gw_ratios);
    SummaryRow gw_row;
    gw_row.depth = "GW";
    gw_row.min_ratio = q.min;
    gw_row.q1 = q.q1;
    gw_row.median_ratio = q.median;
    gw_row.q3 = q.q3;
    gw_row.max_ratio = q.max;
    gw_row.mean_ratio = q.mean;
    gw_row.mean_sample_std =
        std::accumulate(gw_stds.begin(), gw_stds.end(), 0.0) / static_cast<double>(gw_stds.size());
    table.rows.push_back(gw_row);

    std::set<int> distinct(fit_depths.begin(), fit_depths.end());
    if (distinct.size() >= 2) {
        const LogFit fit = fit_log_depth(fit_depths, fit_stds);
        table.log_fit_a = fit.a;
        table.log_fit_b = fit.b;
        table.crossing_depth = log_fit_crossing_depth(fit, gw_row.mean_sample_std);
    }
    return table;
}

LabeledDataset load_labeled_dataset(const std::string& dataset_dir) {
    const fs::path dir(dataset_dir);
    const auto feat_header = read_csv_header((dir / "features.csv").string());
    const auto& names = FeatureVector::names();
    if (feat_header.size() != names.size() + 1)
        throw std::invalid_argument("unexpected features.csv width");
    for (std::size_t i = 0; i < names.size(); ++i)
        if (feat_header[i + 1] != names[i])
            throw std::invalid_argument("features.csv column mismatch: " + feat_header[i + 1]);

    std::map<std::string, std::vector<double>> feats;
    for (const auto& cols : read_csv((dir / "features.csv").string())) {
        std::vector<double> v;
        for (std::size_t i = 1; i < cols.size(); ++i) v.push_back(std::stod(cols[i]));
        feats[cols[0]] = std::move(v);
    }

    LabeledDataset ds;
    for (const auto& cols : read_csv((dir / "labels.csv").string())) {
        if (cols.size() < 7) throw std::invalid_argument("malformed labels.csv row");
        auto it = feats.find(cols[0]);
        if (it == feats.end()) throw std::invalid_argument("labels.csv references unknown " + cols[0]);
        LabeledRow row;
        row.instance_id = cols[0];
        row.label_crit1 = std::stoi(cols[1]);
        row.label_crit2 = std::stoi(cols[2]);
        row.qaoa_ratio = std::stod(cols[3]);
        row.gw_ratio = std::stod(cols[4]);
        row.n = std::stoi(cols[5]);
        row.p_used = std::stoi(cols[6]);
        const auto& v = it->second;
        auto set = [&v](double& field, int idx) { field = v.at(idx); };
        FeatureVector& f = row.features;
        set(f.density, 0);
        set(f.log_norm_laplacian_ev1, 1);
        set(f.log_norm_laplacian_ev2, 2);
        set(f.log_norm_laplacian_ev3, 3);
        set(f.log_norm_laplacian_ev4, 4);
        set(f.log_norm_laplacian_ev5, 5);
        set(f.log_laplacian_ev_ratio, 6);
        set(f.spectral_gap, 7);
        set(f.independence_number_over_number_edges, 8);
        set(f.matching_number_over_number_edges, 9);
        set(f.diameter_over_number_edges, 10);
        set(f.domination_number_over_number_nodes, 11);
        set(f.zero_forcing_number_over_number_nodes, 12);
        set(f.power_domination_over_number_edges, 13);
        set(f.percent_cut, 14);
        set(f.percent_positive_lower_part_relaxation_solution, 15);
        set(f.percent_close1_lower_part_relaxation_solution, 16);
        set(f.percent_close3_lower_part_relaxation_solution, 17);
        set(f.expected_costGW_over_sdp_cost, 18);
        set(f.std_costGW_over_sdp_cost, 19);
        ds.rows.push_back(std::move(row));
    }
    return ds;
}

} // namespace qsel
