#include "qsel/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "qsel/rng.hpp"
#include <nlohmann/json.hpp>

namespace qsel {

Graph::Graph(int n, std::vector<Edge> edges, std::optional<std::uint64_t> seed)
    : n_(n), edges_(std::move(edges)), seed_(seed) {
    if (n_ < 2) throw std::invalid_argument("graph needs at least 2 vertices");
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw std::invalid_argument("self-loop in edge list");
        if (e.u < 0 || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw std::invalid_argument("duplicate edge in edge list");
    }
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
}

double Graph::total_weight() const {
    double w = 0.0;
    for (const auto& e : edges_) w += e.w;
    return w;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& e : edges_) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

int Graph::max_degree() const {
    auto d = degrees();
    return *std::max_element(d.begin(), d.end());
}

bool Graph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
        }
    }
    return count == n_;
}

std::vector<double> Graph::adjacency_matrix() const {
    std::vector<double> a(static_cast<std::size_t>(n_) * n_, 0.0);
    for (const auto& e : edges_) {
        a[static_cast<std::size_t>(e.u) * n_ + e.v] = e.w;
        a[static_cast<std::size_t>(e.v) * n_ + e.u] = e.w;
    }
    return a;
}

std::vector<double> Graph::laplacian_matrix() const {
    std::vector<double> l(static_cast<std::size_t>(n_) * n_, 0.0);
    for (const auto& e : edges_) {
        l[static_cast<std::size_t>(e.u) * n_ + e.v] = -e.w;
        l[static_cast<std::size_t>(e.v) * n_ + e.u] = -e.w;
        l[static_cast<std::size_t>(e.u) * n_ + e.u] += e.w;
        l[static_cast<std::size_t>(e.v) * n_ + e.v] += e.w;
    }
    return l;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back({perm[e.u], perm[e.v], e.w});
    return Graph(n_, std::move(out));
}

std::string Graph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    auto arr = nlohmann::json::array();
    for (const auto& e : edges_) arr.push_back({e.u, e.v, e.w});
    j["edges"] = arr;
    if (seed_) j["seed"] = *seed_;
    return j.dump();
}

Graph Graph::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
    std::optional<std::uint64_t> seed;
    if (j.contains("seed")) seed = j["seed"].get<std::uint64_t>();
    return Graph(j.at("n").get<int>(), std::move(edges), seed);
}

Graph generate_regular(int n, int degree, std::uint64_t seed) {
    if (n < 2 || degree < 1) throw std::invalid_argument("need n >= 2 and degree >= 1");
    if (degree >= n) throw std::invalid_argument("degree must be smaller than n");
    if ((static_cast<long long>(n) * degree) % 2 != 0)
        throw std::invalid_argument("n * degree must be even");

    Rng rng(mix_seed(seed, 0xC0FF));
    const int stubs = n * degree;
    std::vector<int> pool(stubs);

    for (int restart = 0; restart < 10000; ++restart) {
        for (int i = 0; i < stubs; ++i) pool[i] = i / degree;
        // Fisher-Yates, then read consecutive pairs as edges.
        for (int i = stubs - 1; i > 0; --i) {
            int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(pool[i], pool[j]);
        }
        std::set<std::pair<int, int>> seen;
        std::vector<Edge> edges;
        edges.reserve(stubs / 2);
        bool ok = true;
        for (int i = 0; i < stubs; i += 2) {
            int u = pool[i], v = pool[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) {
                ok = false;
                break;
            }
            edges.push_back({u, v, 1.0});
        }
        if (!ok) continue;
        Graph g(n, std::move(edges), seed);
        if (!g.is_connected()) continue;
        return g;
    }
    throw numerical_error("generate_regular: restart budget (10000) exhausted");
}

double maxcut_cost(const Graph& g, const std::vector<int>& z) {
    if (static_cast<int>(z.size()) != g.num_vertices())
        throw std::invalid_argument("assignment length mismatch");
    for (int zi : z)
        if (zi != 1 && zi != -1) throw std::invalid_argument("assignment entries must be +/-1");
    double cost = 0.0;
    for (const auto& e : g.edges()) cost += e.w * (1 - z[e.u] * z[e.v]) * 0.5;
    return cost;
}

CutAssignment brute_force_max(const Graph& g) {
    const int n = g.num_vertices();
    if (n > 30) throw std::invalid_argument("brute_force_max limited to n <= 30");
    const auto& edges = g.edges();
    const std::uint64_t patterns = 1ULL << (n - 1);
    double best = -1.0;
    std::uint64_t best_mask = 0;
    // z_0 fixed to +1 (bit 0 of the mask addresses vertex 1).
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        double cost = 0.0;
        for (const auto& e : edges) {
            const int su = e.u == 0 ? 0 : static_cast<int>((mask >> (e.u - 1)) & 1);
            const int sv = e.v == 0 ? 0 : static_cast<int>((mask >> (e.v - 1)) & 1);
            if (su != sv) cost += e.w;
        }
        if (cost > best) {
            best = cost;
            best_mask = mask;
        }
    }
    CutAssignment out;
    out.z.assign(n, 1);
    for (int i = 1; i < n; ++i)
        if ((best_mask >> (i - 1)) & 1) out.z[i] = -1;
    out.cost = best;
    return out;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    auto at = [&a, n](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    const double tol = 1e-12;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off = std::max(off, std::abs(at(i, j)));
        if (off < tol) {
            std::vector<double> ev(n);
            for (int i = 0; i < n; ++i) ev[i] = at(i, i);
            std::sort(ev.begin(), ev.end(), std::greater<double>());
            return ev;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < tol) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    double residual = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) residual = std::max(residual, std::abs(at(i, j)));
    throw numerical_error("jacobi eigensolver did not converge, residual " + std::to_string(residual));
}

SpectrumReport spectrum(const Graph& g) {
    SpectrumReport rep;
    rep.laplacian_eigenvalues = symmetric_eigenvalues(g.laplacian_matrix(), g.num_vertices());
    rep.adjacency_eigenvalues = symmetric_eigenvalues(g.adjacency_matrix(), g.num_vertices());
    return rep;
}

} // namespace qsel
