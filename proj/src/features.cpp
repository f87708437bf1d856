#include "qsel/features.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <queue>

#include <nlohmann/json.hpp>

namespace qsel {

std::array<double, kNumFeatures> FeatureVector::values() const {
    return {density,
            log_norm_laplacian_ev1,
            log_norm_laplacian_ev2,
            log_norm_laplacian_ev3,
            log_norm_laplacian_ev4,
            log_norm_laplacian_ev5,
            log_laplacian_ev_ratio,
            spectral_gap,
            independence_number_over_number_edges,
            matching_number_over_number_edges,
            diameter_over_number_edges,
            domination_number_over_number_nodes,
            zero_forcing_number_over_number_nodes,
            power_domination_over_number_edges,
            percent_cut,
            percent_positive_lower_part_relaxation_solution,
            percent_close1_lower_part_relaxation_solution,
            percent_close3_lower_part_relaxation_solution,
            expected_costGW_over_sdp_cost,
            std_costGW_over_sdp_cost};
}

const std::array<std::string, kNumFeatures>& FeatureVector::names() {
    static const std::array<std::string, kNumFeatures> kNames = {
        "density",
        "log_norm_laplacian_ev1",
        "log_norm_laplacian_ev2",
        "log_norm_laplacian_ev3",
        "log_norm_laplacian_ev4",
        "log_norm_laplacian_ev5",
        "log_laplacian_ev_ratio",
        "spectral_gap",
        "independence_number_over_number_edges",
        "matching_number_over_number_edges",
        "diameter_over_number_edges",
        "domination_number_over_number_nodes",
        "zero_forcing_number_over_number_nodes",
        "power_domination_over_number_edges",
        "percent_cut",
        "percent_positive_lower_part_relaxation_solution",
        "percent_close1_lower_part_relaxation_solution",
        "percent_close3_lower_part_relaxation_solution",
        "expected_costGW_over_sdp_cost",
        "std_costGW_over_sdp_cost"};
    return kNames;
}

const std::array<std::string, kNumFeatures>& FeatureVector::groups() {
    static const std::array<std::string, kNumFeatures> kGroups = {
        "i", "i", "i", "i", "i", "i", "i", "i",
        "ii", "ii", "ii", "ii", "ii", "ii",
        "iii", "iii", "iii", "iii", "iii", "iii"};
    return kGroups;
}

const std::array<bool, kNumFeatures>& FeatureVector::expensive() {
    static const std::array<bool, kNumFeatures> kExpensive = {
        false, false, false, false, false, false, false, false,
        true,  false, false, true,  true,  true,
        false, false, false, false, false, false};
    return kExpensive;
}

namespace {

// Closed/open neighborhood bitmasks; n <= 24 fits in 32 bits.
std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
    std::vector<std::uint32_t> nb(g.num_vertices(), 0);
    for (const auto& e : g.edges()) {
        nb[e.u] |= 1u << e.v;
        nb[e.v] |= 1u << e.u;
    }
    return nb;
}

void check_search_size(const Graph& g) {
    if (g.num_vertices() > 24)
        throw std::invalid_argument("exhaustive set-number search limited to n <= 24");
}

int mis_recurse(const std::vector<std::uint32_t>& nb, std::uint32_t remaining, int current,
                int& best) {
    if (remaining == 0) {
        best = std::max(best, current);
        return 0;
    }
    if (current + std::popcount(remaining) <= best) return 0;
    // Branch on a maximum-degree remaining vertex.
    int pick = -1, maxdeg = -1;
    for (std::uint32_t m = remaining; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        const int deg = std::popcount(nb[v] & remaining);
        if (deg > maxdeg) {
            maxdeg = deg;
            pick = v;
        }
    }
    mis_recurse(nb, remaining & ~((1u << pick) | nb[pick]), current + 1, best);
    mis_recurse(nb, remaining & ~(1u << pick), current, best);
    return best;
}

int matching_recurse(const std::vector<std::uint32_t>& nb, std::uint32_t remaining, int current,
                     int& best) {
    // Strip isolated-in-remaining vertices, then branch on the lowest vertex.
    while (remaining != 0) {
        const int u = std::countr_zero(remaining);
        if ((nb[u] & remaining) != 0) break;
        remaining &= ~(1u << u);
    }
    if (remaining == 0) {
        best = std::max(best, current);
        return best;
    }
    if (current + std::popcount(remaining) / 2 <= best) return best;
    const int u = std::countr_zero(remaining);
    for (std::uint32_t m = nb[u] & remaining; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        matching_recurse(nb, remaining & ~((1u << u) | (1u << v)), current + 1, best);
    }
    matching_recurse(nb, remaining & ~(1u << u), current, best);
    return best;
}

// Enumerates size-k vertex subsets, invoking pred(mask); returns true when
// some subset satisfies pred.
bool any_subset_of_size(int n, int k, const std::function<bool(std::uint32_t)>& pred) {
    if (k == 0) return pred(0);
    std::uint32_t mask = (1u << k) - 1;
    const std::uint32_t limit = 1u << n;
    while (mask < limit) {
        if (pred(mask)) return true;
        // Gosper's hack: next subset of the same popcount.
        const std::uint32_t c = mask & (0 - mask);
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return false;
}

std::uint32_t zero_forcing_closure(const std::vector<std::uint32_t>& nb, int n,
                                   std::uint32_t filled) {
    const std::uint32_t all = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    bool changed = true;
    while (changed && filled != all) {
        changed = false;
        for (std::uint32_t m = filled; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const std::uint32_t unfilled = nb[v] & ~filled;
            if (unfilled != 0 && (unfilled & (unfilled - 1)) == 0) {
                filled |= unfilled;
                changed = true;
            }
        }
    }
    return filled;
}

} // namespace

int independence_number(const Graph& g) {
    check_search_size(g);
    const auto nb = neighbor_masks(g);
    int best = 0;
    mis_recurse(nb, (1u << g.num_vertices()) - 1, 0, best);
    return best;
}

int matching_number(const Graph& g) {
    check_search_size(g);
    const auto nb = neighbor_masks(g);
    int best = 0;
    matching_recurse(nb, (1u << g.num_vertices()) - 1, 0, best);
    return best;
}

int diameter(const Graph& g) {
    const int n = g.num_vertices();
    const auto& adj = g.adjacency_lists();
    int diam = 0;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) throw numerical_error("diameter undefined: graph is disconnected");
            diam = std::max(diam, dist[v]);
        }
    }
    return diam;
}

int domination_number(const Graph& g) {
    check_search_size(g);
    const int n = g.num_vertices();
    const auto nb = neighbor_masks(g);
    std::vector<std::uint32_t> closed(n);
    for (int v = 0; v < n; ++v) closed[v] = nb[v] | (1u << v);
    const std::uint32_t all = (1u << n) - 1;
    for (int k = 1; k <= n; ++k) {
        const auto dominates = [&](std::uint32_t s) {
            std::uint32_t covered = 0;
            for (std::uint32_t m = s; m;) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                covered |= closed[v];
            }
            return covered == all;
        };
        if (any_subset_of_size(n, k, dominates)) return k;
    }
    return n;
}

int zero_forcing_number(const Graph& g) {
    check_search_size(g);
    const int n = g.num_vertices();
    const auto nb = neighbor_masks(g);
    const std::uint32_t all = (1u << n) - 1;
    for (int k = 1; k <= n; ++k) {
        const auto forces = [&](std::uint32_t s) { return zero_forcing_closure(nb, n, s) == all; };
        if (any_subset_of_size(n, k, forces)) return k;
    }
    return n;
}

int power_domination_number(const Graph& g) {
    check_search_size(g);
    const int n = g.num_vertices();
    const auto nb = neighbor_masks(g);
    const std::uint32_t all = (1u << n) - 1;
    for (int k = 1; k <= n; ++k) {
        const auto powers = [&](std::uint32_t s) {
            // Domination step first, then the zero-forcing closure.
            std::uint32_t filled = 0;
            for (std::uint32_t m = s; m;) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                filled |= nb[v] | (1u << v);
            }
            return zero_forcing_closure(nb, n, filled) == all;
        };
        if (any_subset_of_size(n, k, powers)) return k;
    }
    return n;
}

bool zero_forcing_closure_fills(const Graph& g, std::uint32_t filled) {
    check_search_size(g);
    const int n = g.num_vertices();
    const auto nb = neighbor_masks(g);
    return zero_forcing_closure(nb, n, filled) == ((1u << n) - 1);
}

void spectral_features(const Graph& g, const SpectrumReport& spec, FeatureVector& out) {
    const int n = g.num_vertices();
    if (n < 5) throw std::invalid_argument("spectral features need n >= 5");
    const double degree = static_cast<double>(g.max_degree());
    const auto& ev = spec.laplacian_eigenvalues;
    out.density = 2.0 * g.num_edges() / (static_cast<double>(n) * (n - 1));
    double* logs[5] = {&out.log_norm_laplacian_ev1, &out.log_norm_laplacian_ev2,
                       &out.log_norm_laplacian_ev3, &out.log_norm_laplacian_ev4,
                       &out.log_norm_laplacian_ev5};
    for (int k = 0; k < 5; ++k) {
        if (ev[k] <= 0.0)
            throw numerical_error("non-positive Laplacian eigenvalue inside a logarithm");
        *logs[k] = std::log(ev[k] / degree);
    }
    out.log_laplacian_ev_ratio = std::log(ev[0] / ev[1]);
    out.spectral_gap = ev[n - 2]; // second smallest
}

void set_number_features(const Graph& g, FeatureVector& out) {
    const double edges = g.num_edges();
    const double nodes = g.num_vertices();
    out.independence_number_over_number_edges = independence_number(g) / edges;
    out.matching_number_over_number_edges = matching_number(g) / edges;
    out.diameter_over_number_edges = diameter(g) / edges;
    out.domination_number_over_number_nodes = domination_number(g) / nodes;
    out.zero_forcing_number_over_number_nodes = zero_forcing_number(g) / nodes;
    // Appendix naming normalizes this one by the edge count.
    out.power_domination_over_number_edges = power_domination_number(g) / edges;
}

void gw_features(const SdpSolution& sol, const GwStats& stats, const Graph& g, FeatureVector& out) {
    const int n = sol.n;
    if (sol.relaxed_cost <= 0.0) throw std::invalid_argument("relaxed cost must be positive");
    out.percent_cut = sol.relaxed_cost / g.num_edges();
    int positive = 0, close1 = 0, close3 = 0;
    const int total = n * (n + 1) / 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            const double x = sol.cholesky_lower[static_cast<std::size_t>(i) * n + j];
            if (x > 0.0) ++positive;
            if (std::abs(x) < 0.1) ++close1;
            if (std::abs(x) < 0.001) ++close3;
        }
    out.percent_positive_lower_part_relaxation_solution = static_cast<double>(positive) / total;
    out.percent_close1_lower_part_relaxation_solution = static_cast<double>(close1) / total;
    out.percent_close3_lower_part_relaxation_solution = static_cast<double>(close3) / total;
    out.expected_costGW_over_sdp_cost = stats.expected_cost / sol.relaxed_cost;
    out.std_costGW_over_sdp_cost = stats.std_cost / sol.relaxed_cost;
}

FeatureVector compute_features(const Graph& g, const SdpSolution& sol, const GwStats& stats) {
    FeatureVector out;
    spectral_features(g, spectrum(g), out);
    set_number_features(g, out);
    gw_features(sol, stats, g, out);
    for (double v : out.values())
        if (!std::isfinite(v)) throw numerical_error("non-finite feature value");
    return out;
}

std::string feature_schema_json() {
    nlohmann::json arr = nlohmann::json::array();
    const auto& names = FeatureVector::names();
    const auto& groups = FeatureVector::groups();
    const auto& expensive = FeatureVector::expensive();
    for (int i = 0; i < kNumFeatures; ++i)
        arr.push_back({{"name", names[i]}, {"group", groups[i]}, {"expensive", expensive[i]}});
    nlohmann::json j;
    j["features"] = arr;
    j["power_domination_normalization"] = "edges"; // name and prose disagree; the name wins
    return j.dump(2);
}

} // namespace qsel
