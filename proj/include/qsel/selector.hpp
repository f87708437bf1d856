#ifndef QSEL_SELECTOR_HPP
#define QSEL_SELECTOR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qsel/features.hpp"

namespace qsel {

using Matrix = std::vector<std::vector<double>>;

// --- labeling ----------------------------------------------------------

// Criterion 1: GW strictly outperforms QAOA (ties stay 0).
int label_criterion1(double qaoa_ratio, double gw_ratio);
// Criterion 2: QAOA above 0.98 and ahead of GW by at least 0.02.
int label_criterion2(double qaoa_ratio, double gw_ratio);

struct LabeledRow {
    std::string instance_id;
    FeatureVector features;
    int label_crit1 = 0;
    int label_crit2 = 0;
    double qaoa_ratio = 0.0;
    double gw_ratio = 0.0;
    int n = 0;
    int p_used = 0;
};

struct LabeledDataset {
    std::vector<LabeledRow> rows;

    Matrix feature_matrix(const std::vector<int>& feature_indices) const;
    std::vector<int> labels(int criterion) const;
};

// --- classifiers -------------------------------------------------------

class Classifier {
public:
    virtual ~Classifier() = default;
    virtual void fit(const Matrix& x, const std::vector<int>& y) = 0;
    // rows * n_classes, rows sum to 1
    virtual Matrix predict_proba(const Matrix& x) const = 0;
    virtual std::string kind() const = 0;
    virtual std::string to_json() const = 0;

    std::vector<int> predict(const Matrix& x) const;
    const std::vector<int>& classes() const { return classes_; }

protected:
    std::vector<int> classes_; // sorted distinct labels
};

std::unique_ptr<Classifier> make_knn(int n_neighbors);              // Manhattan, uniform weights
std::unique_ptr<Classifier> make_multinomial_nb(double alpha);      // uniform priors
std::unique_ptr<Classifier> make_bernoulli_nb(double alpha);        // binarize at 0, uniform priors
std::unique_ptr<Classifier> make_gaussian_nb();                     // empirical priors
std::unique_ptr<Classifier> make_decision_tree(int max_depth, int min_samples_leaf,
                                               int min_samples_split); // entropy splits
std::unique_ptr<Classifier> classifier_from_json(const std::string& text);

// --- stateless transforms ---------------------------------------------

Matrix l2_normalize_rows(const Matrix& x);
Matrix binarize(const Matrix& x, double threshold);
// One-way ANOVA F-score per column; constant columns score 0.
std::vector<double> f_classif(const Matrix& x, const std::vector<int>& y);
// Indices of the top floor(percentile/100 * n_features) columns by F-score
// (at least one), in ascending column order.
std::vector<int> select_percentile_mask(const Matrix& x, const std::vector<int>& y,
                                        double percentile);

// --- fitted pipelines --------------------------------------------------

struct PipelineStage {
    enum class Kind { UnionL2Raw, Stacking, Binarize, SelectColumns, Final };
    Kind kind;
    double threshold = 0.0;        // Binarize
    std::vector<int> columns;      // SelectColumns
    std::unique_ptr<Classifier> clf; // Stacking / Final
};

struct FittedPipeline {
    FittedPipeline() = default;
    FittedPipeline(FittedPipeline&&) = default;
    FittedPipeline& operator=(FittedPipeline&&) = default;
    // stages hold unique_ptr classifiers; re-fit or round-trip through JSON
    // instead of copying
    FittedPipeline(const FittedPipeline&) = delete;
    FittedPipeline& operator=(const FittedPipeline&) = delete;

    int criterion = 0;
    std::vector<std::string> feature_names;
    std::vector<PipelineStage> stages;

    Matrix predict_proba(const Matrix& x) const;
    std::vector<int> predict(const Matrix& x) const;
    // Probability of class 1 per row.
    std::vector<double> proba_class1(const Matrix& x) const;

    std::string to_json() const;
    static FittedPipeline from_json(const std::string& text);
};

// Appendix-style exported pipelines. Inputs are the already-selected feature
// columns; k-NN neighbor counts clamp to train size - 1.
FittedPipeline fit_pipeline_crit1(const Matrix& x, const std::vector<int>& y);
FittedPipeline fit_pipeline_crit2(const Matrix& x, const std::vector<int>& y);

struct PipelineSpec {
    int criterion = 1;                // 1 or 2, picks the exported pipeline
    std::vector<int> feature_indices; // columns of the FeatureVector to use
};

// Default feature sets: criterion 1 uses the two GW statistics, criterion 2
// the efficiently computable spectral/density group.
PipelineSpec default_spec_crit1();
PipelineSpec default_spec_crit2();

FittedPipeline fit_pipeline(const PipelineSpec& spec, const LabeledDataset& ds);
FittedPipeline fit_pipeline(const PipelineSpec& spec, const Matrix& x, const std::vector<int>& y);

// --- evaluation --------------------------------------------------------

double balanced_accuracy(const std::vector<int>& y_true, const std::vector<int>& y_pred);

struct CvReport {
    std::vector<double> fold_balanced_accuracy;
    double mean_balanced_accuracy = 0.0;
    std::vector<double> fold_recall_class1;
    std::vector<std::vector<std::vector<long>>> confusion; // per fold, true x pred over {0,1}
    std::vector<int> fold_assignment;                      // per row
};

std::vector<int> stratified_fold_assignment(const std::vector<int>& y, int k, std::uint64_t seed);

CvReport cross_validate(const LabeledDataset& ds, const PipelineSpec& spec, int k = 4,
                        std::uint64_t seed = 0);
CvReport cross_validate(const Matrix& x, const std::vector<int>& y, int criterion, int k,
                        std::uint64_t seed);

struct FeatureImportance {
    double mean_drop = 0.0;
    double std_drop = 0.0;
};

// Balanced-accuracy drop under seeded column shuffles.
std::vector<FeatureImportance> permutation_importance(const FittedPipeline& model, const Matrix& x,
                                                      const std::vector<int>& y, int repeats,
                                                      std::uint64_t seed);

// grid x grid mean class-1 probability over the empirical ranges of the two
// features (all rows overwritten per grid point). Also reports the axes.
struct PartialDependence {
    std::vector<double> a_values;
    std::vector<double> b_values;
    Matrix mean_probability; // indexed [a][b]
};

PartialDependence partial_dependence(const FittedPipeline& model, const Matrix& x, int feat_a,
                                     int feat_b, int grid);

} // namespace qsel

#endif
