#ifndef QSEL_QAOA_HPP
#define QSEL_QAOA_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qsel/graph.hpp"
#include "qsel/nelder_mead.hpp"

namespace qsel {

struct QaoaAngles {
    std::vector<double> gammas;
    std::vector<double> betas;

    int depth() const { return static_cast<int>(gammas.size()); }
    // Flat parameter layout [gamma_1..gamma_p, beta_1..beta_p] used by the optimizer.
    std::vector<double> flat() const;
    static QaoaAngles from_flat(const std::vector<double>& x);
    // Depth extension that leaves the circuit unchanged (extra layers at angle 0).
    QaoaAngles zero_padded(int new_depth) const;
};

struct QaoaRun {
    QaoaAngles angles;
    double f_p = 0.0;
    double ratio = 0.0;
    std::optional<double> sample_std;
    long evaluations = 0;
    std::uint64_t seed = 0;
    bool budget_exhausted = false;
};

struct SampleStats {
    double mean = 0.0;
    double stddev = 0.0;
    double best = 0.0;
};

// Dense statevector simulator for the MaxCut phase-separator + X-mixer
// circuit. Basis convention: bit i of the amplitude index encodes qubit i.
// The per-basis cut-value table is precomputed once per graph.
class QaoaSimulator {
public:
    explicit QaoaSimulator(const Graph& g);

    int num_qubits() const { return n_; }

    // |gamma, beta> starting from the uniform superposition.
    std::vector<std::complex<double>> statevector(const QaoaAngles& angles) const;

    // F_p = sum_z |amp_z|^2 C(z); equals w - <H_C> by construction.
    double expected_cost(const QaoaAngles& angles) const;

    // Draw m basis states from |amp|^2 by inverse CDF; statistics of C(z).
    SampleStats sample_cut_distribution(const QaoaAngles& angles, int m, std::uint64_t seed) const;

    double cut_value(std::uint64_t basis_index) const { return cut_[basis_index]; }

private:
    void apply_layer(std::vector<std::complex<double>>& amp, double gamma, double beta) const;

    const Graph g_;
    int n_;
    std::uint64_t dim_;
    double half_total_weight_; // w in F_p = w - <H_C>
    std::vector<double> cut_;
    std::vector<std::uint16_t> cut_scaled_; // round(2 C(z)) when half-integral
    bool half_integral_ = false;
    int max_scaled_ = 0;
};

std::vector<std::complex<double>> apply_qaoa_circuit(const Graph& g, const QaoaAngles& angles);
double expected_cost(const Graph& g, const QaoaAngles& angles);
SampleStats sample_cut_distribution(const Graph& g, const QaoaAngles& angles, int m,
                                    std::uint64_t seed);

struct AngleOptimizeOptions {
    int random_starts = 10;
    // Nelder-Mead budget per start; 0 means the default 400 * 2p evaluations.
    int evals_per_start = 0;
    double f_spread_tol = 1e-8;
    std::uint64_t seed = 0;
    // Retry pass over instances that did not beat their GW ratio, seeding from
    // every other instance's best angles.
    bool second_pass = true;
};

// Warm-started angle optimization across an ordered instance set at fixed
// depth p. The first instance starts from `random_starts` random angle
// vectors (gamma in [0, 2pi), beta in [0, pi)); later instances additionally
// start from the previous instance's optimum. Optional per-instance
// `warm_starts` (e.g. zero-padded lower-depth optima) are prepended.
std::vector<QaoaRun> optimize_dataset_angles(
    const std::vector<Graph>& graphs, const std::vector<double>& c_max, int p,
    const std::vector<double>& gw_ratios, const AngleOptimizeOptions& opts,
    const std::vector<std::optional<QaoaAngles>>& warm_starts = {});

// Single-instance angle search (the first-instance step of the protocol).
QaoaRun optimize_angles(const Graph& g, double c_max, int p, const AngleOptimizeOptions& opts,
                        const std::vector<QaoaAngles>& extra_starts = {});

struct LogFit {
    double a = 0.0; // slope on ln(depth)
    double b = 0.0;
};

// Least-squares fit mean_std ~ a ln(depth) + b.
LogFit fit_log_depth(const std::vector<int>& depths, const std::vector<double>& mean_stds);

// First depth at which the fitted std drops below gw_std; infinity when the
// fit never crosses (a >= 0 and b above the target).
double log_fit_crossing_depth(const LogFit& fit, double gw_std);

} // namespace qsel

#endif
