#ifndef QSEL_GRAPH_HPP
#define QSEL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsel {

// Non-convergence / search-failure errors; CLI maps these to exit code 2,
// validation errors (std::invalid_argument) to exit code 1.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

// Undirected simple weighted graph. Edges are kept canonically sorted with
// u < v so serialization is deterministic.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges, std::optional<std::uint64_t> seed = std::nullopt);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<std::uint64_t> seed() const { return seed_; }
    double total_weight() const;

    const std::vector<std::vector<int>>& adjacency_lists() const { return adj_; }
    std::vector<int> degrees() const;
    int max_degree() const;
    bool is_connected() const;

    // Dense n*n row-major matrices.
    std::vector<double> adjacency_matrix() const;
    std::vector<double> laplacian_matrix() const;

    // Relabels vertices by perm (vertex i becomes perm[i]).
    Graph relabeled(const std::vector<int>& perm) const;

    std::string to_json() const;
    static Graph from_json(const std::string& text);

private:
    int n_;
    std::vector<Edge> edges_;
    std::optional<std::uint64_t> seed_;
    std::vector<std::vector<int>> adj_;
};

struct CutAssignment {
    std::vector<int> z; // entries in {-1, +1}
    double cost = 0.0;
};

struct SpectrumReport {
    std::vector<double> laplacian_eigenvalues; // descending
    std::vector<double> adjacency_eigenvalues; // descending
};

// Random simple degree-regular graph via the pairing (configuration) model,
// restarting on loops/multi-edges. Disconnected draws are also rejected so
// that the diameter feature is always finite.
// Throws std::invalid_argument on infeasible (n, degree), numerical_error
// when the restart budget (10,000) is exhausted.
Graph generate_regular(int n, int degree, std::uint64_t seed);

// Eq-style cut value: sum over edges of w_ij (1 - z_i z_j) / 2.
double maxcut_cost(const Graph& g, const std::vector<int>& z);

// Exhaustive maximizer over 2^(n-1) sign patterns (z_0 fixed to +1).
// Guarded at n <= 30.
CutAssignment brute_force_max(const Graph& g);

// Eigenvalues of both L = D - A and A via cyclic Jacobi sweeps.
SpectrumReport spectrum(const Graph& g);

// Jacobi eigensolver for a dense symmetric matrix (row-major, size n*n).
// Returns eigenvalues sorted descending. Converged when every off-diagonal
// magnitude drops below 1e-12; throws numerical_error after 100 sweeps.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

} // namespace qsel

#endif
