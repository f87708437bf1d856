#ifndef QSEL_FEATURES_HPP
#define QSEL_FEATURES_HPP

#include <array>
#include <string>
#include <vector>

#include "qsel/graph.hpp"
#include "qsel/gw.hpp"

namespace qsel {

inline constexpr int kNumFeatures = 20;

// The 20 instance features, grouped as (i) spectral/density,
// (ii) combinatorial set numbers, (iii) GW-derived statistics.
struct FeatureVector {
    // group (i)
    double density = 0.0;
    double log_norm_laplacian_ev1 = 0.0;
    double log_norm_laplacian_ev2 = 0.0;
    double log_norm_laplacian_ev3 = 0.0;
    double log_norm_laplacian_ev4 = 0.0;
    double log_norm_laplacian_ev5 = 0.0;
    double log_laplacian_ev_ratio = 0.0;
    double spectral_gap = 0.0;
    // group (ii)
    double independence_number_over_number_edges = 0.0;
    double matching_number_over_number_edges = 0.0;
    double diameter_over_number_edges = 0.0;
    double domination_number_over_number_nodes = 0.0;
    double zero_forcing_number_over_number_nodes = 0.0;
    double power_domination_over_number_edges = 0.0;
    // group (iii)
    double percent_cut = 0.0;
    double percent_positive_lower_part_relaxation_solution = 0.0;
    double percent_close1_lower_part_relaxation_solution = 0.0;
    double percent_close3_lower_part_relaxation_solution = 0.0;
    double expected_costGW_over_sdp_cost = 0.0;
    double std_costGW_over_sdp_cost = 0.0;

    std::array<double, kNumFeatures> values() const;
    static const std::array<std::string, kNumFeatures>& names();
    // "i" / "ii" / "iii" per feature index.
    static const std::array<std::string, kNumFeatures>& groups();
    // NP-hard set numbers carry expensive=true in the dataset schema.
    static const std::array<bool, kNumFeatures>& expensive();
};

// Exact combinatorial quantities (exhaustive / branch-and-bound; n <= 24).
int independence_number(const Graph& g);
int matching_number(const Graph& g);
int diameter(const Graph& g);
int domination_number(const Graph& g);
int zero_forcing_number(const Graph& g);
int power_domination_number(const Graph& g);

// Zero-forcing closure: filled vertices force their unique unfilled
// neighbor; returns true when the whole graph fills.
bool zero_forcing_closure_fills(const Graph& g, std::uint32_t filled);

void spectral_features(const Graph& g, const SpectrumReport& spec, FeatureVector& out);
void set_number_features(const Graph& g, FeatureVector& out);
void gw_features(const SdpSolution& sol, const GwStats& stats, const Graph& g, FeatureVector& out);

// All three groups in one call (computes spectrum, SDP and GW stats itself
// when only the graph is given).
FeatureVector compute_features(const Graph& g, const SdpSolution& sol, const GwStats& stats);

// JSON schema sidecar: name, group, expensive flag per feature.
std::string feature_schema_json();

} // namespace qsel

#endif
