#include "qsel/selector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "qsel/rng.hpp"
#include <nlohmann/json.hpp>

namespace qsel {

using nlohmann::json;

int label_criterion1(double qaoa_ratio, double gw_ratio) {
    return gw_ratio > qaoa_ratio ? 1 : 0;
}

int label_criterion2(double qaoa_ratio, double gw_ratio) {
    return (qaoa_ratio > 0.98 && qaoa_ratio - gw_ratio >= 0.02) ? 1 : 0;
}

Matrix LabeledDataset::feature_matrix(const std::vector<int>& feature_indices) const {
    Matrix x;
    x.reserve(rows.size());
    for (const auto& row : rows) {
        const auto vals = row.features.values();
        std::vector<double> r;
        r.reserve(feature_indices.size());
        for (int idx : feature_indices) r.push_back(vals.at(idx));
        x.push_back(std::move(r));
    }
    return x;
}

std::vector<int> LabeledDataset::labels(int criterion) const {
    std::vector<int> y;
    y.reserve(rows.size());
    for (const auto& row : rows) y.push_back(criterion == 1 ? row.label_crit1 : row.label_crit2);
    return y;
}

// --- shared helpers ----------------------------------------------------

namespace {

std::vector<int> sorted_classes(const std::vector<int>& y) {
    std::set<int> s(y.begin(), y.end());
    return {s.begin(), s.end()};
}

void check_xy(const Matrix& x, const std::vector<int>& y) {
    if (x.empty() || x.size() != y.size()) throw std::invalid_argument("empty or misaligned X/y");
    const std::size_t cols = x.front().size();
    if (cols == 0) throw std::invalid_argument("X has no columns");
    for (const auto& r : x)
        if (r.size() != cols) throw std::invalid_argument("ragged feature matrix");
}

json matrix_to_json(const Matrix& m) {
    json arr = json::array();
    for (const auto& r : m) arr.push_back(r);
    return arr;
}

Matrix matrix_from_json(const json& j) {
    Matrix m;
    for (const auto& r : j) m.push_back(r.get<std::vector<double>>());
    return m;
}

} // namespace

std::vector<int> Classifier::predict(const Matrix& x) const {
    const Matrix proba = predict_proba(x);
    std::vector<int> out;
    out.reserve(x.size());
    for (const auto& row : proba) {
        const std::size_t best = std::max_element(row.begin(), row.end()) - row.begin();
        out.push_back(classes_[best]);
    }
    return out;
}

// --- k-nearest neighbors ----------------------------------------------

namespace {

class KnnClassifier final : public Classifier {
public:
    explicit KnnClassifier(int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("k must be >= 1");
    }

    void fit(const Matrix& x, const std::vector<int>& y) override {
        check_xy(x, y);
        x_ = x;
        y_ = y;
        classes_ = sorted_classes(y);
    }

    Matrix predict_proba(const Matrix& x) const override {
        Matrix out;
        out.reserve(x.size());
        // requested k clamps to train size - 1 (and at least 1)
        const int k = std::max(1, std::min<int>(k_, static_cast<int>(x_.size()) - 1));
        std::vector<std::pair<double, std::size_t>> dist(x_.size());
        for (const auto& q : x) {
            if (q.size() != x_.front().size()) throw std::invalid_argument("query width mismatch");
            for (std::size_t i = 0; i < x_.size(); ++i) {
                double d = 0.0;
                for (std::size_t f = 0; f < q.size(); ++f) d += std::abs(q[f] - x_[i][f]);
                dist[i] = {d, i};
            }
            std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
            std::vector<double> proba(classes_.size(), 0.0);
            for (int t = 0; t < k; ++t) {
                const int label = y_[dist[t].second];
                const std::size_t c =
                    std::lower_bound(classes_.begin(), classes_.end(), label) - classes_.begin();
                proba[c] += 1.0 / k;
            }
            out.push_back(std::move(proba));
        }
        return out;
    }

    std::string kind() const override { return "knn"; }

    std::string to_json() const override {
        json j{{"kind", "knn"}, {"k", k_}, {"x", matrix_to_json(x_)}, {"y", y_}, {"classes", classes_}};
        return j.dump();
    }

    void load(const json& j) {
        k_ = j.at("k");
        x_ = matrix_from_json(j.at("x"));
        y_ = j.at("y").get<std::vector<int>>();
        classes_ = j.at("classes").get<std::vector<int>>();
    }

private:
    int k_;
    Matrix x_;
    std::vector<int> y_;
};

// --- naive Bayes family ------------------------------------------------

Matrix proba_from_joint_log_likelihood(const Matrix& jll) {
    Matrix out(jll.size());
    for (std::size_t i = 0; i < jll.size(); ++i) {
        const double m = *std::max_element(jll[i].begin(), jll[i].end());
        double z = 0.0;
        std::vector<double> p(jll[i].size());
        for (std::size_t c = 0; c < jll[i].size(); ++c) {
            p[c] = std::exp(jll[i][c] - m);
            z += p[c];
        }
        for (double& v : p) v /= z;
        out[i] = std::move(p);
    }
    return out;
}

class MultinomialNB final : public Classifier {
public:
    explicit MultinomialNB(double alpha) : alpha_(alpha) {}

    void fit(const Matrix& x, const std::vector<int>& y) override {
        check_xy(x, y);
        classes_ = sorted_classes(y);
        if (classes_.size() < 2) throw std::invalid_argument("multinomial NB needs >= 2 classes");
        const std::size_t cols = x.front().size();
        for (const auto& r : x)
            for (double v : r)
                if (v < 0.0)
                    throw std::invalid_argument("multinomial NB requires non-negative inputs");
        feature_log_prob_.assign(classes_.size(), std::vector<double>(cols, 0.0));
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            std::vector<double> counts(cols, 0.0);
            double total = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (y[i] != classes_[c]) continue;
                for (std::size_t f = 0; f < cols; ++f) {
                    counts[f] += x[i][f];
                    total += x[i][f];
                }
            }
            const double denom = total + alpha_ * static_cast<double>(cols);
            for (std::size_t f = 0; f < cols; ++f)
                feature_log_prob_[c][f] = std::log((counts[f] + alpha_) / denom);
        }
    }

    Matrix predict_proba(const Matrix& x) const override {
        Matrix jll(x.size(), std::vector<double>(classes_.size(), 0.0));
        const double log_prior = -std::log(static_cast<double>(classes_.size()));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t c = 0; c < classes_.size(); ++c) {
                double s = log_prior;
                for (std::size_t f = 0; f < x[i].size(); ++f) {
                    if (x[i][f] < 0.0)
                        throw std::invalid_argument("multinomial NB requires non-negative inputs");
                    s += x[i][f] * feature_log_prob_[c][f];
                }
                jll[i][c] = s;
            }
        return proba_from_joint_log_likelihood(jll);
    }

    std::string kind() const override { return "multinomial_nb"; }

    std::string to_json() const override {
        json j{{"kind", "multinomial_nb"},
               {"alpha", alpha_},
               {"classes", classes_},
               {"feature_log_prob", matrix_to_json(feature_log_prob_)}};
        return j.dump();
    }

    void load(const json& j) {
        alpha_ = j.at("alpha");
        classes_ = j.at("classes").get<std::vector<int>>();
        feature_log_prob_ = matrix_from_json(j.at("feature_log_prob"));
    }

private:
    double alpha_;
    Matrix feature_log_prob_; // class x feature
};

class BernoulliNB final : public Classifier {
public:
    explicit BernoulliNB(double alpha) : alpha_(alpha) {}

    void fit(const Matrix& x, const std::vector<int>& y) override {
        check_xy(x, y);
        classes_ = sorted_classes(y);
        if (classes_.size() < 2) throw std::invalid_argument("bernoulli NB needs >= 2 classes");
        const std::size_t cols = x.front().size();
        log_prob_.assign(classes_.size(), std::vector<double>(cols, 0.0));
        log_neg_prob_.assign(classes_.size(), std::vector<double>(cols, 0.0));
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            std::vector<double> ones(cols, 0.0);
            double members = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (y[i] != classes_[c]) continue;
                ++members;
                for (std::size_t f = 0; f < cols; ++f)
                    if (x[i][f] > 0.0) ones[f] += 1.0; // internal binarize-at-0 rule
            }
            for (std::size_t f = 0; f < cols; ++f) {
                const double p = (ones[f] + alpha_) / (members + 2.0 * alpha_);
                log_prob_[c][f] = std::log(p);
                log_neg_prob_[c][f] = std::log(1.0 - p);
            }
        }
    }

    Matrix predict_proba(const Matrix& x) const override {
        Matrix jll(x.size(), std::vector<double>(classes_.size(), 0.0));
        const double log_prior = -std::log(static_cast<double>(classes_.size()));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t c = 0; c < classes_.size(); ++c) {
                double s = log_prior;
                for (std::size_t f = 0; f < x[i].size(); ++f)
                    s += (x[i][f] > 0.0) ? log_prob_[c][f] : log_neg_prob_[c][f];
                jll[i][c] = s;
            }
        return proba_from_joint_log_likelihood(jll);
    }

    std::string kind() const override { return "bernoulli_nb"; }

    std::string to_json() const override {
        json j{{"kind", "bernoulli_nb"},
               {"alpha", alpha_},
               {"classes", classes_},
               {"log_prob", matrix_to_json(log_prob_)},
               {"log_neg_prob", matrix_to_json(log_neg_prob_)}};
        return j.dump();
    }

    void load(const json& j) {
        alpha_ = j.at("alpha");
        classes_ = j.at("classes").get<std::vector<int>>();
        log_prob_ = matrix_from_json(j.at("log_prob"));
        log_neg_prob_ = matrix_from_json(j.at("log_neg_prob"));
    }

private:
    double alpha_;
    Matrix log_prob_, log_neg_prob_; // class x feature
};

class GaussianNB final : public Classifier {
public:
    void fit(const Matrix& x, const std::vector<int>& y) override {
        check_xy(x, y);
        classes_ = sorted_classes(y);
        if (classes_.size() < 2) throw std::invalid_argument("gaussian NB needs >= 2 classes");
        const std::size_t cols = x.front().size();
        theta_.assign(classes_.size(), std::vector<double>(cols, 0.0));
        var_.assign(classes_.size(), std::vector<double>(cols, 0.0));
        log_prior_.assign(classes_.size(), 0.0);

        // var_smoothing relative to the largest overall feature variance.
        double max_var = 0.0;
        for (std::size_t f = 0; f < cols; ++f) {
            double mean = 0.0;
            for (const auto& r : x) mean += r[f];
            mean /= x.size();
            double v = 0.0;
            for (const auto& r : x) v += (r[f] - mean) * (r[f] - mean);
            max_var = std::max(max_var, v / x.size());
        }
        const double eps = 1e-9 * max_var;

        for (std::size_t c = 0; c < classes_.size(); ++c) {
            double members = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (y[i] != classes_[c]) continue;
                ++members;
                for (std::size_t f = 0; f < cols; ++f) theta_[c][f] += x[i][f];
            }
            for (std::size_t f = 0; f < cols; ++f) theta_[c][f] /= members;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (y[i] != classes_[c]) continue;
                for (std::size_t f = 0; f < cols; ++f) {
                    const double d = x[i][f] - theta_[c][f];
                    var_[c][f] += d * d;
                }
            }
            for (std::size_t f = 0; f < cols; ++f) var_[c][f] = var_[c][f] / members + eps;
            log_prior_[c] = std::log(members / static_cast<double>(x.size()));
        }
    }

    Matrix predict_proba(const Matrix& x) const override {
        constexpr double kLog2Pi = 1.8378770664093454835606594728112;
        Matrix jll(x.size(), std::vector<double>(classes_.size(), 0.0));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t c = 0; c < classes_.size(); ++c) {
                double s = log_prior_[c];
                for (std::size_t f = 0; f < x[i].size(); ++f) {
                    const double d = x[i][f] - theta_[c][f];
                    s += -0.5 * (kLog2Pi + std::log(var_[c][f]) + d * d / var_[c][f]);
                }
                jll[i][c] = s;
            }
        return proba_from_joint_log_likelihood(jll);
    }

    std::string kind() const override { return "gaussian_nb"; }

    std::string to_json() const override {
        json j{{"kind", "gaussian_nb"},
               {"classes", classes_},
               {"theta", matrix_to_json(theta_)},
               {"var", matrix_to_json(var_)},
               {"log_prior", log_prior_}};
        return j.dump();
    }

    void load(const json& j) {
        classes_ = j.at("classes").get<std::vector<int>>();
        theta_ = matrix_from_json(j.at("theta"));
        var_ = matrix_from_json(j.at("var"));
        log_prior_ = j.at("log_prior").get<std::vector<double>>();
    }

private:
    Matrix theta_, var_;
    std::vector<double> log_prior_;
};

// --- decision tree -----------------------------------------------------

double entropy_of_counts(const std::vector<double>& counts, double total) {
    double h = 0.0;
    for (double c : counts) {
        if (c <= 0.0) continue;
        const double p = c / total;
        h -= p * std::log2(p);
    }
    return h;
}

class DecisionTree final : public Classifier {
public:
    DecisionTree(int max_depth, int min_samples_leaf, int min_samples_split)
        : max_depth_(max_depth), min_leaf_(min_samples_leaf), min_split_(min_samples_split) {}

    void fit(const Matrix& x, const std::vector<int>& y) override {
        check_xy(x, y);
        classes_ = sorted_classes(y);
        nodes_.clear();
        std::vector<std::size_t> idx(x.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        build(x, y, idx, 0);
    }

    Matrix predict_proba(const Matrix& x) const override {
        Matrix out;
        out.reserve(x.size());
        for (const auto& r : x) {
            int node = 0;
            while (nodes_[node].feature >= 0)
                node = (r[nodes_[node].feature] <= nodes_[node].threshold) ? nodes_[node].left
                                                                           : nodes_[node].right;
            out.push_back(nodes_[node].proba);
        }
        return out;
    }

    std::string kind() const override { return "decision_tree"; }

    std::string to_json() const override {
        json arr = json::array();
        for (const auto& nd : nodes_)
            arr.push_back({{"feature", nd.feature},
                           {"threshold", nd.threshold},
                           {"left", nd.left},
                           {"right", nd.right},
                           {"proba", nd.proba}});
        json j{{"kind", "decision_tree"},
               {"max_depth", max_depth_},
               {"min_samples_leaf", min_leaf_},
               {"min_samples_split", min_split_},
               {"classes", classes_},
               {"nodes", arr}};
        return j.dump();
    }

    void load(const json& j) {
        max_depth_ = j.at("max_depth");
        min_leaf_ = j.at("min_samples_leaf");
        min_split_ = j.at("min_samples_split");
        classes_ = j.at("classes").get<std::vector<int>>();
        nodes_.clear();
        for (const auto& nd : j.at("nodes"))
            nodes_.push_back({nd.at("feature"), nd.at("threshold"), nd.at("left"), nd.at("right"),
                              nd.at("proba").get<std::vector<double>>()});
    }

    int leaf_count() const {
        int c = 0;
        for (const auto& nd : nodes_)
            if (nd.feature < 0) ++c;
        return c;
    }

private:
    struct Node {
        int feature = -1; // -1 marks a leaf
        double threshold = 0.0;
        int left = -1, right = -1;
        std::vector<double> proba;
    };

    std::vector<double> class_counts(const std::vector<int>& y,
                                     const std::vector<std::size_t>& idx) const {
        std::vector<double> counts(classes_.size(), 0.0);
        for (std::size_t i : idx) {
            const std::size_t c =
                std::lower_bound(classes_.begin(), classes_.end(), y[i]) - classes_.begin();
            counts[c] += 1.0;
        }
        return counts;
    }

    int build(const Matrix& x, const std::vector<int>& y, const std::vector<std::size_t>& idx,
              int depth) {
        const int my_id = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
        auto counts = class_counts(y, idx);
        const double total = static_cast<double>(idx.size());
        const double parent_entropy = entropy_of_counts(counts, total);

        auto make_leaf = [&]() {
            std::vector<double> proba(counts);
            for (double& p : proba) p /= total;
            nodes_[my_id].proba = std::move(proba);
            return my_id;
        };

        const bool pure = std::count_if(counts.begin(), counts.end(),
                                        [](double c) { return c > 0.0; }) <= 1;
        if (depth >= max_depth_ || pure || idx.size() < static_cast<std::size_t>(min_split_))
            return make_leaf();

        int best_feature = -1;
        double best_threshold = 0.0, best_gain = 1e-12;
        const std::size_t cols = x.front().size();
        for (std::size_t f = 0; f < cols; ++f) {
            std::vector<double> vals;
            vals.reserve(idx.size());
            for (std::size_t i : idx) vals.push_back(x[i][f]);
            std::sort(vals.begin(), vals.end());
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            for (std::size_t t = 0; t + 1 < vals.size(); ++t) {
                const double thr = 0.5 * (vals[t] + vals[t + 1]);
                std::vector<double> lc(classes_.size(), 0.0), rc(classes_.size(), 0.0);
                double ln = 0.0, rn = 0.0;
                for (std::size_t i : idx) {
                    const std::size_t c =
                        std::lower_bound(classes_.begin(), classes_.end(), y[i]) - classes_.begin();
                    if (x[i][f] <= thr) {
                        lc[c] += 1.0;
                        ln += 1.0;
                    } else {
                        rc[c] += 1.0;
                        rn += 1.0;
                    }
                }
                if (ln < min_leaf_ || rn < min_leaf_) continue;
                const double child = (ln / total) * entropy_of_counts(lc, ln) +
                                     (rn / total) * entropy_of_counts(rc, rn);
                const double gain = parent_entropy - child;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_feature = static_cast<int>(f);
                    best_threshold = thr;
                }
            }
        }
        if (best_feature < 0) return make_leaf();

        std::vector<std::size_t> left_idx, right_idx;
        for (std::size_t i : idx)
            (x[i][best_feature] <= best_threshold ? left_idx : right_idx).push_back(i);
        nodes_[my_id].feature = best_feature;
        nodes_[my_id].threshold = best_threshold;
        nodes_[my_id].left = build(x, y, left_idx, depth + 1);
        nodes_[my_id].right = build(x, y, right_idx, depth + 1);
        return my_id;
    }

    int max_depth_, min_leaf_, min_split_;
    std::vector<Node> nodes_;
};

} // namespace

std::unique_ptr<Classifier> make_knn(int n_neighbors) {
    return std::make_unique<KnnClassifier>(n_neighbors);
}
std::unique_ptr<Classifier> make_multinomial_nb(double alpha) {
    return std::make_unique<MultinomialNB>(alpha);
}
std::unique_ptr<Classifier> make_bernoulli_nb(double alpha) {
    return std::make_unique<BernoulliNB>(alpha);
}
std::unique_ptr<Classifier> make_gaussian_nb() { return std::make_unique<GaussianNB>(); }
std::unique_ptr<Classifier> make_decision_tree(int max_depth, int min_samples_leaf,
                                               int min_samples_split) {
    return std::make_unique<DecisionTree>(max_depth, min_samples_leaf, min_samples_split);
}

std::unique_ptr<Classifier> classifier_from_json(const std::string& text) {
    const json j = json::parse(text);
    const std::string kind = j.at("kind");
    if (kind == "knn") {
        auto c = std::make_unique<KnnClassifier>(1);
        c->load(j);
        return c;
    }
    if (kind == "multinomial_nb") {
        auto c = std::make_unique<MultinomialNB>(1.0);
        c->load(j);
        return c;
    }
    if (kind == "bernoulli_nb") {
        auto c = std::make_unique<BernoulliNB>(1.0);
        c->load(j);
        return c;
    }
    if (kind == "gaussian_nb") {
        auto c = std::make_unique<GaussianNB>();
        c->load(j);
        return c;
    }
    if (kind == "decision_tree") {
        auto c = std::make_unique<DecisionTree>(1, 1, 2);
        c->load(j);
        return c;
    }
    throw std::invalid_argument("unknown classifier kind: " + kind);
}

// --- transforms --------------------------------------------------------

Matrix l2_normalize_rows(const Matrix& x) {
    Matrix out = x;
    for (auto& r : out) {
        double norm2 = 0.0;
        for (double v : r) norm2 += v * v;
        if (norm2 <= 0.0) continue; // zero rows pass through unchanged
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& v : r) v *= inv;
    }
    return out;
}

Matrix binarize(const Matrix& x, double threshold) {
    Matrix out = x;
    for (auto& r : out)
        for (double& v : r) v = v > threshold ? 1.0 : 0.0;
    return out;
}

std::vector<double> f_classif(const Matrix& x, const std::vector<int>& y) {
    check_xy(x, y);
    const auto classes = sorted_classes(y);
    const std::size_t k = classes.size(), n = x.size(), cols = x.front().size();
    if (k < 2) throw std::invalid_argument("f_classif needs >= 2 classes");
    std::vector<double> scores(cols, 0.0);
    for (std::size_t f = 0; f < cols; ++f) {
        double grand = 0.0;
        for (const auto& r : x) grand += r[f];
        grand /= static_cast<double>(n);
        double ss_between = 0.0, ss_within = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            double sum = 0.0, count = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                if (y[i] == classes[c]) {
                    sum += x[i][f];
                    ++count;
                }
            const double mean = sum / count;
            ss_between += count * (mean - grand) * (mean - grand);
            for (std::size_t i = 0; i < n; ++i)
                if (y[i] == classes[c]) ss_within += (x[i][f] - mean) * (x[i][f] - mean);
        }
        if (ss_within <= 0.0) {
            scores[f] = 0.0; // constant (or perfectly class-constant) feature
            continue;
        }
        scores[f] = (ss_between / (k - 1)) / (ss_within / (n - k));
    }
    return scores;
}

std::vector<int> select_percentile_mask(const Matrix& x, const std::vector<int>& y,
                                        double percentile) {
    const auto scores = f_classif(x, y);
    const int cols = static_cast<int>(scores.size());
    if (std::all_of(scores.begin(), scores.end(), [](double s) { return s <= 0.0; }))
        throw std::invalid_argument("no informative columns: all F-scores are zero");
    int keep = static_cast<int>(cols * percentile / 100.0);
    keep = std::max(1, std::min(keep, cols));
    std::vector<int> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&scores](int a, int b) { return scores[a] > scores[b]; });
    std::vector<int> mask(order.begin(), order.begin() + keep);
    std::sort(mask.begin(), mask.end());
    return mask;
}

// --- pipelines ---------------------------------------------------------

namespace {

Matrix select_columns(const Matrix& x, const std::vector<int>& cols) {
    Matrix out;
    out.reserve(x.size());
    for (const auto& r : x) {
        std::vector<double> nr;
        nr.reserve(cols.size());
        for (int c : cols) nr.push_back(r.at(c));
        out.push_back(std::move(nr));
    }
    return out;
}

Matrix union_l2_raw(const Matrix& x) {
    const Matrix norm = l2_normalize_rows(x);
    Matrix out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<double> r = norm[i];
        r.insert(r.end(), x[i].begin(), x[i].end());
        out.push_back(std::move(r));
    }
    return out;
}

// Column order [predicted class, probability columns, prior features].
Matrix stack_augment(const Classifier& clf, const Matrix& x) {
    const Matrix proba = clf.predict_proba(x);
    const std::vector<int> pred = clf.predict(x);
    Matrix out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<double> r;
        r.reserve(1 + proba[i].size() + x[i].size());
        r.push_back(static_cast<double>(pred[i]));
        r.insert(r.end(), proba[i].begin(), proba[i].end());
        r.insert(r.end(), x[i].begin(), x[i].end());
        out.push_back(std::move(r));
    }
    return out;
}

Matrix apply_stage(const PipelineStage& st, const Matrix& x) {
    switch (st.kind) {
        case PipelineStage::Kind::UnionL2Raw:
            return union_l2_raw(x);
        case PipelineStage::Kind::Stacking:
            return stack_augment(*st.clf, x);
        case PipelineStage::Kind::Binarize:
            return binarize(x, st.threshold);
        case PipelineStage::Kind::SelectColumns:
            return select_columns(x, st.columns);
        case PipelineStage::Kind::Final:
            throw std::logic_error("final stage is not a transform");
    }
    throw std::logic_error("unreachable");
}

int clamped_k(int k, std::size_t train_size) {
    return std::min<int>(k, static_cast<int>(train_size) - 1);
}

} // namespace

Matrix FittedPipeline::predict_proba(const Matrix& x) const {
    Matrix z = x;
    for (const auto& st : stages) {
        if (st.kind == PipelineStage::Kind::Final) return st.clf->predict_proba(z);
        z = apply_stage(st, z);
    }
    throw std::logic_error("pipeline has no final classifier");
}

std::vector<int> FittedPipeline::predict(const Matrix& x) const {
    Matrix z = x;
    for (const auto& st : stages) {
        if (st.kind == PipelineStage::Kind::Final) return st.clf->predict(z);
        z = apply_stage(st, z);
    }
    throw std::logic_error("pipeline has no final classifier");
}

std::vector<double> FittedPipeline::proba_class1(const Matrix& x) const {
    const Matrix proba = predict_proba(x);
    std::vector<double> out;
    out.reserve(proba.size());
    for (const auto& r : proba) out.push_back(r.size() > 1 ? r[1] : 0.0);
    return out;
}

std::string FittedPipeline::to_json() const {
    json arr = json::array();
    for (const auto& st : stages) {
        json s;
        switch (st.kind) {
            case PipelineStage::Kind::UnionL2Raw:
                s["stage"] = "union_l2_raw";
                break;
            case PipelineStage::Kind::Stacking:
                s["stage"] = "stacking";
                s["classifier"] = json::parse(st.clf->to_json());
                break;
            case PipelineStage::Kind::Binarize:
                s["stage"] = "binarize";
                s["threshold"] = st.threshold;
                break;
            case PipelineStage::Kind::SelectColumns:
                s["stage"] = "select_columns";
                s["columns"] = st.columns;
                break;
            case PipelineStage::Kind::Final:
                s["stage"] = "final";
                s["classifier"] = json::parse(st.clf->to_json());
                break;
        }
        arr.push_back(std::move(s));
    }
    json j{{"schema_version", 1},
           {"criterion", criterion},
           {"feature_names", feature_names},
           {"stages", arr}};
    return j.dump(2);
}

FittedPipeline FittedPipeline::from_json(const std::string& text) {
    const json j = json::parse(text);
    FittedPipeline p;
    p.criterion = j.at("criterion");
    p.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    for (const auto& s : j.at("stages")) {
        PipelineStage st;
        const std::string stage = s.at("stage");
        if (stage == "union_l2_raw") {
            st.kind = PipelineStage::Kind::UnionL2Raw;
        } else if (stage == "stacking") {
            st.kind = PipelineStage::Kind::Stacking;
            st.clf = classifier_from_json(s.at("classifier").dump());
        } else if (stage == "binarize") {
            st.kind = PipelineStage::Kind::Binarize;
            st.threshold = s.at("threshold");
        } else if (stage == "select_columns") {
            st.kind = PipelineStage::Kind::SelectColumns;
            st.columns = s.at("columns").get<std::vector<int>>();
        } else if (stage == "final") {
            st.kind = PipelineStage::Kind::Final;
            st.clf = classifier_from_json(s.at("classifier").dump());
        } else {
            throw std::invalid_argument("unknown pipeline stage: " + stage);
        }
        p.stages.push_back(std::move(st));
    }
    return p;
}

FittedPipeline fit_pipeline_crit1(const Matrix& x, const std::vector<int>& y) {
    check_xy(x, y);
    if (sorted_classes(y).size() < 2)
        throw std::invalid_argument("single-class training set");

    FittedPipeline p;
    p.criterion = 1;
    Matrix z = x;

    PipelineStage s1;
    s1.kind = PipelineStage::Kind::UnionL2Raw;
    z = apply_stage(s1, z);
    p.stages.push_back(std::move(s1));

    PipelineStage s2;
    s2.kind = PipelineStage::Kind::Stacking;
    s2.clf = make_knn(clamped_k(41, z.size()));
    s2.clf->fit(z, y);
    z = stack_augment(*s2.clf, z);
    p.stages.push_back(std::move(s2));

    PipelineStage s3;
    s3.kind = PipelineStage::Kind::Final;
    s3.clf = make_multinomial_nb(0.1);
    s3.clf->fit(z, y);
    p.stages.push_back(std::move(s3));
    return p;
}

FittedPipeline fit_pipeline_crit2(const Matrix& x, const std::vector<int>& y) {
    check_xy(x, y);
    if (sorted_classes(y).size() < 2)
        throw std::invalid_argument("single-class training set");

    FittedPipeline p;
    p.criterion = 2;
    Matrix z = x;

    PipelineStage s1;
    s1.kind = PipelineStage::Kind::SelectColumns;
    s1.columns = select_percentile_mask(z, y, 95.0);
    z = apply_stage(s1, z);
    p.stages.push_back(std::move(s1));

    PipelineStage s2;
    s2.kind = PipelineStage::Kind::Stacking;
    s2.clf = make_decision_tree(2, 13, 9);
    s2.clf->fit(z, y);
    z = stack_augment(*s2.clf, z);
    p.stages.push_back(std::move(s2));

    PipelineStage s3;
    s3.kind = PipelineStage::Kind::Binarize;
    s3.threshold = 0.25;
    z = apply_stage(s3, z);
    p.stages.push_back(std::move(s3));

    PipelineStage s4;
    s4.kind = PipelineStage::Kind::Stacking;
    s4.clf = make_knn(clamped_k(8, z.size()));
    s4.clf->fit(z, y);
    z = stack_augment(*s4.clf, z);
    p.stages.push_back(std::move(s4));

    PipelineStage s5;
    s5.kind = PipelineStage::Kind::Stacking;
    s5.clf = make_bernoulli_nb(10.0);
    s5.clf->fit(z, y);
    z = stack_augment(*s5.clf, z);
    p.stages.push_back(std::move(s5));

    PipelineStage s6;
    s6.kind = PipelineStage::Kind::Stacking;
    s6.clf = make_gaussian_nb();
    s6.clf->fit(z, y);
    z = stack_augment(*s6.clf, z);
    p.stages.push_back(std::move(s6));

    PipelineStage s7;
    s7.kind = PipelineStage::Kind::Final;
    s7.clf = make_multinomial_nb(0.001);
    s7.clf->fit(z, y);
    p.stages.push_back(std::move(s7));
    return p;
}

PipelineSpec default_spec_crit1() {
    return {1, {18, 19}}; // expected_costGW_over_sdp_cost, std_costGW_over_sdp_cost
}

PipelineSpec default_spec_crit2() {
    return {2, {0, 1, 2, 3, 4, 5, 6, 7}}; // spectral/density group
}

FittedPipeline fit_pipeline(const PipelineSpec& spec, const Matrix& x, const std::vector<int>& y) {
    FittedPipeline p = spec.criterion == 1 ? fit_pipeline_crit1(x, y) : fit_pipeline_crit2(x, y);
    for (int idx : spec.feature_indices) p.feature_names.push_back(FeatureVector::names().at(idx));
    return p;
}

FittedPipeline fit_pipeline(const PipelineSpec& spec, const LabeledDataset& ds) {
    return fit_pipeline(spec, ds.feature_matrix(spec.feature_indices), ds.labels(spec.criterion));
}

// --- evaluation --------------------------------------------------------

double balanced_accuracy(const std::vector<int>& y_true, const std::vector<int>& y_pred) {
    if (y_true.size() != y_pred.size() || y_true.empty())
        throw std::invalid_argument("misaligned label vectors");
    std::map<int, std::pair<long, long>> per_class; // class -> (hits, total)
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        auto& [hits, total] = per_class[y_true[i]];
        ++total;
        if (y_pred[i] == y_true[i]) ++hits;
    }
    double acc = 0.0;
    for (const auto& [cls, ht] : per_class)
        acc += static_cast<double>(ht.first) / static_cast<double>(ht.second);
    return acc / static_cast<double>(per_class.size());
}

std::vector<int> stratified_fold_assignment(const std::vector<int>& y, int k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("need k >= 2 folds");
    std::vector<int> assignment(y.size(), -1);
    for (int cls : sorted_classes(y)) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (y[i] == cls) members.push_back(i);
        if (members.size() < static_cast<std::size_t>(k))
            throw std::invalid_argument("a class has fewer members than folds");
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(cls) + 0xF01D));
        for (std::size_t i = members.size() - 1; i > 0; --i) {
            const std::size_t j = rng.next_below(i + 1);
            std::swap(members[i], members[j]);
        }
        for (std::size_t pos = 0; pos < members.size(); ++pos)
            assignment[members[pos]] = static_cast<int>(pos % k);
    }
    return assignment;
}

CvReport cross_validate(const Matrix& x, const std::vector<int>& y, int criterion, int k,
                        std::uint64_t seed) {
    check_xy(x, y);
    CvReport rep;
    rep.fold_assignment = stratified_fold_assignment(y, k, seed);
    for (int fold = 0; fold < k; ++fold) {
        Matrix xtr, xte;
        std::vector<int> ytr, yte;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (rep.fold_assignment[i] == fold) {
                xte.push_back(x[i]);
                yte.push_back(y[i]);
            } else {
                xtr.push_back(x[i]);
                ytr.push_back(y[i]);
            }
        }
        const FittedPipeline model =
            criterion == 1 ? fit_pipeline_crit1(xtr, ytr) : fit_pipeline_crit2(xtr, ytr);
        const std::vector<int> pred = model.predict(xte);
        rep.fold_balanced_accuracy.push_back(balanced_accuracy(yte, pred));

        long hits1 = 0, total1 = 0;
        std::vector<std::vector<long>> cm(2, std::vector<long>(2, 0));
        for (std::size_t i = 0; i < yte.size(); ++i) {
            if (yte[i] == 1) {
                ++total1;
                if (pred[i] == 1) ++hits1;
            }
            if (yte[i] >= 0 && yte[i] <= 1 && pred[i] >= 0 && pred[i] <= 1) ++cm[yte[i]][pred[i]];
        }
        rep.fold_recall_class1.push_back(total1 > 0 ? static_cast<double>(hits1) / total1 : 0.0);
        rep.confusion.push_back(std::move(cm));
    }
    rep.mean_balanced_accuracy =
        std::accumulate(rep.fold_balanced_accuracy.begin(), rep.fold_balanced_accuracy.end(), 0.0) /
        static_cast<double>(k);
    return rep;
}

CvReport cross_validate(const LabeledDataset& ds, const PipelineSpec& spec, int k,
                        std::uint64_t seed) {
    return cross_validate(ds.feature_matrix(spec.feature_indices), ds.labels(spec.criterion),
                          spec.criterion, k, seed);
}

std::vector<FeatureImportance> permutation_importance(const FittedPipeline& model, const Matrix& x,
                                                      const std::vector<int>& y, int repeats,
                                                      std::uint64_t seed) {
    check_xy(x, y);
    if (repeats < 1) throw std::invalid_argument("need repeats >= 1");
    const double baseline = balanced_accuracy(y, model.predict(x));
    const std::size_t cols = x.front().size();
    std::vector<FeatureImportance> out(cols);
    for (std::size_t f = 0; f < cols; ++f) {
        double sum = 0.0, sum2 = 0.0;
        for (int rep = 0; rep < repeats; ++rep) {
            Matrix shuffled = x;
            Rng rng(mix_seed(seed, f * 1000003ULL + static_cast<std::uint64_t>(rep)));
            for (std::size_t i = x.size() - 1; i > 0; --i) {
                const std::size_t j = rng.next_below(i + 1);
                std::swap(shuffled[i][f], shuffled[j][f]);
            }
            const double drop = baseline - balanced_accuracy(y, model.predict(shuffled));
            sum += drop;
            sum2 += drop * drop;
        }
        out[f].mean_drop = sum / repeats;
        out[f].std_drop = std::sqrt(std::max(0.0, sum2 / repeats - out[f].mean_drop * out[f].mean_drop));
    }
    return out;
}

PartialDependence partial_dependence(const FittedPipeline& model, const Matrix& x, int feat_a,
                                     int feat_b, int grid) {
    check_xy(x, std::vector<int>(x.size(), 0));
    if (grid < 1) throw std::invalid_argument("grid must be >= 1");
    const auto range = [&x](int f) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& r : x) {
            lo = std::min(lo, r.at(f));
            hi = std::max(hi, r.at(f));
        }
        return std::pair<double, double>{lo, hi};
    };
    const auto [alo, ahi] = range(feat_a);
    const auto [blo, bhi] = range(feat_b);
    const auto axis = [grid](double lo, double hi) {
        std::vector<double> v(grid);
        if (grid == 1) {
            v[0] = 0.5 * (lo + hi);
        } else {
            for (int i = 0; i < grid; ++i) v[i] = lo + (hi - lo) * i / (grid - 1);
        }
        return v;
    };

    PartialDependence pd;
    pd.a_values = axis(alo, ahi);
    pd.b_values = axis(blo, bhi);
    pd.mean_probability.assign(grid, std::vector<double>(grid, 0.0));
    Matrix modified = x;
    for (int ia = 0; ia < grid; ++ia)
        for (int ib = 0; ib < grid; ++ib) {
            for (auto& r : modified) {
                r[feat_a] = pd.a_values[ia];
                r[feat_b] = pd.b_values[ib];
            }
            const auto proba = model.proba_class1(modified);
            pd.mean_probability[ia][ib] =
                std::accumulate(proba.begin(), proba.end(), 0.0) / static_cast<double>(proba.size());
        }
    return pd;
}

} // namespace qsel
