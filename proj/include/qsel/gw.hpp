#ifndef QSEL_GW_HPP
#define QSEL_GW_HPP

#include <cstdint>
#include <vector>

#include "qsel/graph.hpp"

namespace qsel {

// MaxCut SDP relaxation solved in unit-vector form. All matrices are n*n
// row-major; row i of `vectors` is v_i.
struct SdpSolution {
    int n = 0;
    std::vector<double> vectors;
    std::vector<double> gram;           // X_ij = v_i . v_j
    std::vector<double> cholesky_lower; // lower-triangular factor of X, diagonal included
    double relaxed_cost = 0.0;          // C_rlx
    int sweeps = 0;
    bool converged = true;
};

struct GwStats {
    double expected_cost = 0.0;
    double std_cost = 0.0;
    double best_cost = 0.0;
    double relaxed_cost = 0.0;
    int m = 0;
    std::uint64_t rng_seed = 0;
    bool sdp_converged = true;
};

// Block-coordinate ascent on unit vectors: v_i <- -normalize(sum_j w_ij v_j)
// in cyclic vertex order, from seeded unit Gaussians. Stops when the relative
// objective change between sweeps drops below tol; after max_iters sweeps the
// best-so-far solution is returned with converged = false.
SdpSolution solve_sdp(const Graph& g, double tol = 1e-8, int max_iters = 10000,
                      std::uint64_t seed = 0);

// Relaxed objective sum w_ij (1 - X_ij) / 2 for a given Gram matrix.
double relaxed_cost(const Graph& g, const std::vector<double>& gram);

// Hyperplane rounding: z_i = sign(v_i . r) for a standard Gaussian r,
// with sign(0) := +1.
CutAssignment random_projection(const Graph& g, const SdpSolution& sol, std::uint64_t seed);
CutAssignment random_projection(const Graph& g, const SdpSolution& sol, const std::vector<double>& r);

// Statistics over m independent projections of an existing solution;
// per-projection RNG streams are derived from (seed, projection index).
GwStats project_stats(const Graph& g, const SdpSolution& sol, int m, std::uint64_t seed);

// Solves the SDP once and runs m independent projections.
GwStats estimate_gw(const Graph& g, int m, std::uint64_t seed, double tol = 1e-8,
                    int max_iters = 10000);

} // namespace qsel

#endif
