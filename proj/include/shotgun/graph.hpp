#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shotgun/errors.hpp"
#include "shotgun/random.hpp"

namespace shotgun {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable once built; all queries are const and safe to share across
// threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<std::size_t>(check_n(n))) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_unchecked(u, v);
        g.finalize();
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return m_; }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    bool has_edge(int u, int v) const {
        const auto& nu = neighbors(u);
        check_vertex(v);
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Relabeled copy: vertex v becomes perm[v].
    Graph permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != vertex_count())
            throw param_error("permutation size does not match vertex count");
        Graph g(vertex_count());
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v)
                    g.add_edge_unchecked(perm[static_cast<std::size_t>(u)],
                                         perm[static_cast<std::size_t>(v)]);
        g.finalize();
        return g;
    }

    bool operator==(const Graph& other) const = default;

private:
    static int check_n(int n) {
        if (n < 0) throw param_error("vertex count must be non-negative");
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw param_error("vertex id " + std::to_string(v) + " out of range [0, " +
                              std::to_string(vertex_count()) + ")");
    }

    void add_edge_unchecked(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw param_error("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }

    void finalize() {
        m_ = 0;
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            if (std::adjacent_find(list.begin(), list.end()) != list.end())
                throw param_error("duplicate edge in input");
            m_ += list.size();
        }
        m_ /= 2;
    }

    std::vector<std::vector<int>> adj_;
    std::size_t m_ = 0;
};

// Parameters of the G(n, p_n) model. Exactly one of alpha (p = n^-alpha)
// or p may be set.
struct ErParams {
    int n = 0;
    std::optional<double> alpha;
    std::optional<double> p;
    std::uint64_t seed = 0;

    double edge_probability() const {
        validate();
        if (p) return *p;
        // p = n^-alpha in double precision; alpha near 0 or 1 can push this
        // outside practically useful ranges for small n.
        return std::exp(-*alpha * std::log(static_cast<double>(n)));
    }

    void validate() const {
        if (n <= 0) throw param_error("n must be positive");
        if (alpha.has_value() == p.has_value())
            throw param_error("exactly one of alpha and p must be set");
        if (alpha && (*alpha <= 0.0 || *alpha >= 1.0))
            throw param_error("alpha must lie in (0, 1)");
        if (p && (*p < 0.0 || *p > 1.0))
            throw param_error("p must lie in [0, 1]");
    }
};

namespace detail {

inline std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

// k-th pair in the lexicographic order (0,1),(0,2),...,(1,2),... used by the
// sparse sampler. Advances i incrementally, so sequential access is O(1).
struct PairCursor {
    int n;
    int i = 0;
    std::size_t row_start = 0;  // linear index of pair (i, i+1)

    std::pair<int, int> at(std::size_t k) {
        while (k >= row_start + static_cast<std::size_t>(n - 1 - i)) {
            row_start += static_cast<std::size_t>(n - 1 - i);
            ++i;
        }
        return {i, i + 1 + static_cast<int>(k - row_start)};
    }
};

}  // namespace detail

// Erdos-Renyi sample: each of the C(n,2) edges present independently with
// probability p, drawn in lexicographic pair order from a fixed seed.
// Two regimes with identical per-edge distribution: p > 0.1 draws one uniform
// per pair, p <= 0.1 jumps between edges with geometric gaps. The algorithm
// is pinned per regime so a (params, seed) pair always gives the same graph.
inline Graph sample_er(const ErParams& params) {
    const double p = params.edge_probability();
    const int n = params.n;
    Graph g(n);
    std::vector<std::pair<int, int>> edges;
    if (p >= 1.0) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return Graph::from_edges(n, edges);
    }
    if (p <= 0.0) return g;

    Rng rng(params.seed);
    const std::size_t total = detail::pair_count(n);
    if (p > 0.1) {
        detail::PairCursor cur{n};
        for (std::size_t k = 0; k < total; ++k) {
            if (uniform_double(rng) < p) edges.push_back(cur.at(k));
        }
    } else {
        const double log_q = std::log1p(-p);
        detail::PairCursor cur{n};
        std::size_t pos = 0;
        while (true) {
            const double u = 1.0 - uniform_double(rng);  // (0, 1]
            const double gap = std::floor(std::log(u) / log_q);
            if (gap >= static_cast<double>(total)) break;
            pos += static_cast<std::size_t>(gap);
            if (pos >= total) break;
            edges.push_back(cur.at(pos));
            ++pos;
        }
    }
    return Graph::from_edges(n, edges);
}

// BFS distances from v; -1 marks unreachable vertices.
inline std::vector<int> distances_from(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw param_error("source vertex out of range");
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(v)] = 0;
    std::queue<int> q;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

// Induced subgraph on a vertex set, plus the id translation in both
// directions. vertex_ids is ascending, so new ids preserve original order.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_ids;  // new id -> original id, ascending

    int index_of(int original_id) const {
        auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), original_id);
        if (it == vertex_ids.end() || *it != original_id)
            throw param_error("vertex not present in induced subgraph");
        return static_cast<int>(it - vertex_ids.begin());
    }
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (v < 0 || v >= g.vertex_count())
            throw param_error("induced subgraph vertex out of range");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (int w : g.neighbors(vs[i])) {
            if (w <= vs[i]) continue;
            auto it = std::lower_bound(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                       vs.end(), w);
            if (it != vs.end() && *it == w)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(it - vs.begin()));
        }
    }
    InducedSubgraph out{Graph::from_edges(static_cast<int>(vs.size()), edges), std::move(vs)};
    return out;
}

// Exact diameter; nullopt when the graph is disconnected.
inline std::optional<int> diameter(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw param_error("diameter requires at least one vertex");
    int best = 0;
    for (int v = 0; v < n; ++v) {
        auto dist = distances_from(g, v);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

inline std::vector<int> common_neighbors(const Graph& g, int u, int v) {
    if (u == v) throw param_error("common_neighbors requires distinct vertices");
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::vector<int> out;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
    return out;
}

// Text fixture format: "n m" header then m lines "u v" with u < v, sorted.
inline void save_graph(const Graph& g, std::ostream& os) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline void save_graph(const Graph& g, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open for writing: " + path);
    save_graph(g, os);
    if (!os) throw io_error("write failed: " + path);
}

inline Graph load_graph(std::istream& is, const std::string& name = "<stream>") {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line)) throw parse_error(name, 1, "missing header line");
    ++lineno;
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw parse_error(name, lineno, "header must be 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        if (!std::getline(is, line)) throw parse_error(name, lineno + 1, "unexpected end of file");
        ++lineno;
        std::istringstream row(line);
        long long u = -1, v = -1;
        if (!(row >> u >> v)) throw parse_error(name, lineno, "edge line must be 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error(name, lineno, "edge endpoint out of range");
        if (u >= v) throw parse_error(name, lineno, "edges must satisfy u < v");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const param_error& e) {
        throw parse_error(name, lineno, e.what());
    }
}

inline Graph load_graph_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open for reading: " + path);
    return load_graph(is, path);
}

}  // namespace shotgun
