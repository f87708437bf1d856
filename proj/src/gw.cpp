#include "qsel/gw.hpp"

#include <algorithm>
#include <cmath>

#include "qsel/rng.hpp"

namespace qsel {

double relaxed_cost(const Graph& g, const std::vector<double>& gram) {
    const int n = g.num_vertices();
    double cost = 0.0;
    for (const auto& e : g.edges())
        cost += e.w * (1.0 - gram[static_cast<std::size_t>(e.u) * n + e.v]) * 0.5;
    return cost;
}

namespace {

double objective(const Graph& g, const std::vector<double>& vecs) {
    const int n = g.num_vertices();
    double cost = 0.0;
    for (const auto& e : g.edges()) {
        double dot = 0.0;
        for (int k = 0; k < n; ++k)
            dot += vecs[static_cast<std::size_t>(e.u) * n + k] * vecs[static_cast<std::size_t>(e.v) * n + k];
        cost += e.w * (1.0 - dot) * 0.5;
    }
    return cost;
}

// Cholesky of a PSD matrix; adds `jitter` to the diagonal on failure.
std::vector<double> cholesky_with_jitter(std::vector<double> x, int n) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            for (int j = 0; j <= i; ++j) {
                double s = x[static_cast<std::size_t>(i) * n + j];
                for (int k = 0; k < j; ++k)
                    s -= l[static_cast<std::size_t>(i) * n + k] * l[static_cast<std::size_t>(j) * n + k];
                if (i == j) {
                    if (s <= 0.0) {
                        ok = false;
                        break;
                    }
                    l[static_cast<std::size_t>(i) * n + j] = std::sqrt(s);
                } else {
                    l[static_cast<std::size_t>(i) * n + j] = s / l[static_cast<std::size_t>(j) * n + j];
                }
            }
        }
        if (ok) return l;
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i) * n + i] += 1e-10;
    }
    throw numerical_error("cholesky factorization failed even with jitter");
}

} // namespace

SdpSolution solve_sdp(const Graph& g, double tol, int max_iters, std::uint64_t seed) {
    if (tol <= 0.0) throw std::invalid_argument("tol must be positive");
    const int n = g.num_vertices();
    const auto& adj = g.adjacency_lists();
    std::vector<double> weight(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& e : g.edges()) {
        weight[static_cast<std::size_t>(e.u) * n + e.v] = e.w;
        weight[static_cast<std::size_t>(e.v) * n + e.u] = e.w;
    }

    SdpSolution sol;
    sol.n = n;
    sol.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    Rng rng(mix_seed(seed, 0x5D9));
    for (int i = 0; i < n; ++i) {
        double norm2 = 0.0;
        for (int k = 0; k < n; ++k) {
            const double x = rng.next_gaussian();
            sol.vectors[static_cast<std::size_t>(i) * n + k] = x;
            norm2 += x * x;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (int k = 0; k < n; ++k) sol.vectors[static_cast<std::size_t>(i) * n + k] *= inv;
    }

    double prev = objective(g, sol.vectors);
    sol.converged = false;
    std::vector<double> acc(n);
    for (int sweep = 1; sweep <= max_iters; ++sweep) {
        for (int i = 0; i < n; ++i) {
            std::fill(acc.begin(), acc.end(), 0.0);
            for (int j : adj[i]) {
                const double w = weight[static_cast<std::size_t>(i) * n + j];
                for (int k = 0; k < n; ++k)
                    acc[k] += w * sol.vectors[static_cast<std::size_t>(j) * n + k];
            }
            double norm2 = 0.0;
            for (int k = 0; k < n; ++k) norm2 += acc[k] * acc[k];
            if (norm2 <= 0.0) continue; // degenerate update, keep previous v_i
            const double inv = -1.0 / std::sqrt(norm2);
            for (int k = 0; k < n; ++k)
                sol.vectors[static_cast<std::size_t>(i) * n + k] = inv * acc[k];
        }
        const double cur = objective(g, sol.vectors);
        sol.sweeps = sweep;
        const double denom = std::max(1.0, std::abs(cur));
        if (std::abs(cur - prev) / denom < tol) {
            sol.converged = true;
            prev = cur;
            break;
        }
        prev = cur;
    }
    sol.relaxed_cost = prev;

    sol.gram.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            double dot = 0.0;
            for (int k = 0; k < n; ++k)
                dot += sol.vectors[static_cast<std::size_t>(i) * n + k] *
                       sol.vectors[static_cast<std::size_t>(j) * n + k];
            sol.gram[static_cast<std::size_t>(i) * n + j] = dot;
            sol.gram[static_cast<std::size_t>(j) * n + i] = dot;
        }
    sol.cholesky_lower = cholesky_with_jitter(sol.gram, n);
    return sol;
}

CutAssignment random_projection(const Graph& g, const SdpSolution& sol, const std::vector<double>& r) {
    const int n = g.num_vertices();
    if (sol.n != n) throw std::invalid_argument("solution/graph size mismatch");
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("projection vector size mismatch");
    CutAssignment cut;
    cut.z.assign(n, 1);
    for (int i = 0; i < n; ++i) {
        double dot = 0.0;
        for (int k = 0; k < n; ++k) dot += sol.vectors[static_cast<std::size_t>(i) * n + k] * r[k];
        cut.z[i] = dot < 0.0 ? -1 : 1; // sign(0) := +1
    }
    cut.cost = maxcut_cost(g, cut.z);
    return cut;
}

CutAssignment random_projection(const Graph& g, const SdpSolution& sol, std::uint64_t seed) {
    const int n = g.num_vertices();
    Rng rng(mix_seed(seed, 0xA11));
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) r[i] = rng.next_gaussian();
    return random_projection(g, sol, r);
}

GwStats project_stats(const Graph& g, const SdpSolution& sol, int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("projection count must be >= 1");
    GwStats stats;
    stats.m = m;
    stats.rng_seed = seed;
    stats.relaxed_cost = sol.relaxed_cost;
    stats.sdp_converged = sol.converged;
    double sum = 0.0, sum2 = 0.0, best = 0.0;
    for (int k = 0; k < m; ++k) {
        const double c = random_projection(g, sol, mix_seed(seed, static_cast<std::uint64_t>(k))).cost;
        sum += c;
        sum2 += c * c;
        best = std::max(best, c);
    }
    stats.expected_cost = sum / m;
    const double var = std::max(0.0, sum2 / m - stats.expected_cost * stats.expected_cost);
    stats.std_cost = std::sqrt(var);
    stats.best_cost = best;
    return stats;
}

GwStats estimate_gw(const Graph& g, int m, std::uint64_t seed, double tol, int max_iters) {
    return project_stats(g, solve_sdp(g, tol, max_iters, seed), m, seed);
}

} // namespace qsel
