#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shotgun/errors.hpp"
#include "shotgun/graph.hpp"
#include "shotgun/random.hpp"

namespace shotgun {

// One shredded r-neighborhood: the induced subgraph on all vertices within
// distance r of a center, relabeled by a fresh random permutation so that
// anonymous ids carry no information about original labels. The center's
// label and its position inside `local` are present only in labeled mode.
struct NeighborhoodView {
    int radius = 1;
    std::optional<int> center;      // original label
    std::optional<int> center_pos;  // anonymous id within local
    Graph local;
};

struct NeighborhoodCollection {
    int n = 0;  // vertex count of the source graph == views.size()
    int radius = 1;
    bool labeled = true;
    std::vector<NeighborhoodView> views;
};

// Ground truth retained by shred for harness checks; never serialized.
// All vectors are indexed by position in collection.views (relevant in
// unlabeled mode, where views are shuffled and carry neither label nor
// position). original_ids_of_view[i][a] is the source vertex behind
// anonymous id a of view i.
struct ShredResult {
    NeighborhoodCollection collection;
    std::vector<int> center_of_view;
    std::vector<int> center_pos_of_view;
    std::vector<std::vector<int>> original_ids_of_view;
};

// Shred a graph into its collection of r-neighborhoods, one per vertex.
// Each view gets an independent uniform relabeling sub-seeded from
// (anonymize_seed, center). In unlabeled mode the view order is shuffled as
// well, since position in the collection would otherwise leak the label.
inline ShredResult shred(const Graph& g, int radius, std::uint64_t anonymize_seed,
                         bool labeled_centers) {
    if (radius != 1 && radius != 2) throw param_error("radius must be 1 or 2");
    const int n = g.vertex_count();
    ShredResult out;
    out.collection.n = n;
    out.collection.radius = radius;
    out.collection.labeled = labeled_centers;
    out.collection.views.resize(static_cast<std::size_t>(n));
    out.center_of_view.resize(static_cast<std::size_t>(n));
    out.center_pos_of_view.resize(static_cast<std::size_t>(n));
    out.original_ids_of_view.resize(static_cast<std::size_t>(n));

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    if (!labeled_centers) {
        Rng rng(derive_seed(anonymize_seed, 0xC011EC7ULL));
        shuffle(order, rng);
    }

    for (int slot = 0; slot < n; ++slot) {
        const int v = order[static_cast<std::size_t>(slot)];
        std::vector<int> ball;
        auto dist = distances_from(g, v);
        for (int w = 0; w < n; ++w)
            if (dist[static_cast<std::size_t>(w)] >= 0 && dist[static_cast<std::size_t>(w)] <= radius)
                ball.push_back(w);
        auto sub = induced_subgraph(g, ball);
        Rng rng(derive_seed(anonymize_seed, static_cast<std::uint64_t>(v) + 1));
        auto perm = random_permutation(sub.graph.vertex_count(), rng);
        NeighborhoodView view;
        view.radius = radius;
        view.local = sub.graph.permuted(perm);
        const int pos = perm[static_cast<std::size_t>(sub.index_of(v))];
        if (labeled_centers) {
            view.center = v;
            view.center_pos = pos;
        }
        out.collection.views[static_cast<std::size_t>(slot)] = std::move(view);
        out.center_of_view[static_cast<std::size_t>(slot)] = v;
        out.center_pos_of_view[static_cast<std::size_t>(slot)] = pos;
        auto& originals = out.original_ids_of_view[static_cast<std::size_t>(slot)];
        originals.assign(sub.vertex_ids.size(), -1);
        for (std::size_t i = 0; i < sub.vertex_ids.size(); ++i)
            originals[static_cast<std::size_t>(perm[i])] = sub.vertex_ids[i];
    }
    return out;
}

enum class CenterStatus { Found, Ambiguous, NotFound };

struct CenterRecovery {
    CenterStatus status = CenterStatus::NotFound;
    int center_pos = -1;
    int candidate_count = 0;

    bool ok() const { return status == CenterStatus::Found; }
};

// Center of a 1-neighborhood: the unique vertex adjacent to every other
// vertex of the view. Two or more such vertices (e.g. a triangle view) is an
// ambiguity; none means the view is not a 1-neighborhood.
inline CenterRecovery find_center_r1(const NeighborhoodView& view) {
    if (view.radius != 1) throw param_error("find_center_r1 requires a radius-1 view");
    const int k = view.local.vertex_count();
    CenterRecovery rec;
    for (int v = 0; v < k; ++v) {
        if (view.local.degree(v) == k - 1) {
            ++rec.candidate_count;
            rec.center_pos = v;
        }
    }
    if (rec.candidate_count == 1) {
        rec.status = CenterStatus::Found;
    } else if (rec.candidate_count > 1) {
        rec.status = CenterStatus::Ambiguous;
        rec.center_pos = -1;
    }
    return rec;
}

// Center of a 2-neighborhood: drop every vertex whose degree inside the view
// is below n^(1-alpha)/2, then look for the unique survivor adjacent to all
// other survivors. Valid regime is 1/2 < alpha < 1; for alpha < 1/2 the
// whole graph is visible and this carries no signal. A single-vertex view is
// its own center by convention.
inline CenterRecovery find_center_r2(const NeighborhoodView& view, int n, double alpha) {
    if (view.radius != 2) throw param_error("find_center_r2 requires a radius-2 view");
    if (n <= 0) throw param_error("source graph size must be positive");
    const int k = view.local.vertex_count();
    CenterRecovery rec;
    if (k == 1) {
        rec.status = CenterStatus::Found;
        rec.center_pos = 0;
        rec.candidate_count = 1;
        return rec;
    }
    const double threshold =
        0.5 * std::exp((1.0 - alpha) * std::log(static_cast<double>(n)));
    std::vector<int> survivors;
    for (int v = 0; v < k; ++v)
        if (static_cast<double>(view.local.degree(v)) >= threshold) survivors.push_back(v);
    if (survivors.empty()) return rec;  // NotFound: pruning removed everything
    auto sub = induced_subgraph(view.local, survivors);
    const int s = sub.graph.vertex_count();
    for (int v = 0; v < s; ++v) {
        if (sub.graph.degree(v) == s - 1) {
            ++rec.candidate_count;
            rec.center_pos = sub.vertex_ids[static_cast<std::size_t>(v)];
        }
    }
    if (rec.candidate_count == 1) {
        rec.status = CenterStatus::Found;
    } else if (rec.candidate_count > 1) {
        rec.status = CenterStatus::Ambiguous;
        rec.center_pos = -1;
    } else {
        rec.center_pos = -1;
    }
    return rec;
}

namespace detail {

inline void validate_view(const NeighborhoodView& view, int radius, const std::string& name,
                          std::size_t lineno) {
    // Labeled views must be closed r-balls around the claimed center.
    if (!view.center_pos) return;
    const auto dist = distances_from(view.local, *view.center_pos);
    for (int d : dist)
        if (d < 0 || d > radius)
            throw parse_error(name, lineno,
                              "view is not an induced " + std::to_string(radius) +
                                  "-ball around its center");
}

}  // namespace detail

// Line-oriented ASCII collection format, bit-exact on round trip:
//   SHOTGUN v1 n=<n> r=<r> labeled=<0|1>
//   VIEW <center|?> k=<k> m=<m> c=<center_pos|?>
//   <i> <j>          (m lines, 0 <= i < j < k, sorted)
inline void save_collection(const NeighborhoodCollection& c, std::ostream& os) {
    os << "SHOTGUN v1 n=" << c.n << " r=" << c.radius << " labeled=" << (c.labeled ? 1 : 0)
       << '\n';
    for (const auto& view : c.views) {
        os << "VIEW ";
        if (view.center)
            os << *view.center;
        else
            os << '?';
        os << " k=" << view.local.vertex_count() << " m=" << view.local.edge_count() << " c=";
        if (view.center_pos)
            os << *view.center_pos;
        else
            os << '?';
        os << '\n';
        for (auto [i, j] : view.local.edges()) os << i << ' ' << j << '\n';
    }
}

inline void save_collection(const NeighborhoodCollection& c, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open for writing: " + path);
    save_collection(c, os);
    if (!os) throw io_error("write failed: " + path);
}

inline NeighborhoodCollection load_collection(std::istream& is,
                                              const std::string& name = "<stream>") {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line)) throw parse_error(name, 1, "missing header");
    ++lineno;
    int n = -1, r = -1, labeled = -1;
    if (std::sscanf(line.c_str(), "SHOTGUN v1 n=%d r=%d labeled=%d", &n, &r, &labeled) != 3 ||
        n < 0 || (r != 1 && r != 2) || (labeled != 0 && labeled != 1))
        throw parse_error(name, lineno, "malformed header: " + line);
    NeighborhoodCollection c;
    c.n = n;
    c.radius = r;
    c.labeled = labeled == 1;
    c.views.reserve(static_cast<std::size_t>(n));
    for (int idx = 0; idx < n; ++idx) {
        if (!std::getline(is, line)) throw parse_error(name, lineno + 1, "missing VIEW line");
        ++lineno;
        const std::size_t view_line = lineno;
        char center_buf[32] = {0}, pos_buf[32] = {0};
        int k = -1;
        long long m = -1;
        if (std::sscanf(line.c_str(), "VIEW %31s k=%d m=%lld c=%31s", center_buf, &k, &m,
                        pos_buf) != 4 ||
            k < 0 || m < 0)
            throw parse_error(name, lineno, "malformed VIEW line: " + line);
        NeighborhoodView view;
        view.radius = r;
        if (std::string(center_buf) != "?") {
            int center = std::atoi(center_buf);
            if (center < 0 || center >= n)
                throw parse_error(name, lineno, "center label out of range");
            if (c.labeled && center != idx)
                throw parse_error(name, lineno, "labeled views must appear in label order");
            view.center = center;
        } else if (c.labeled) {
            throw parse_error(name, lineno, "labeled collection has unlabeled view");
        }
        std::vector<std::pair<int, int>> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (long long e = 0; e < m; ++e) {
            if (!std::getline(is, line)) throw parse_error(name, lineno + 1, "missing edge line");
            ++lineno;
            int i = -1, j = -1;
            if (std::sscanf(line.c_str(), "%d %d", &i, &j) != 2 || i < 0 || j <= i || j >= k)
                throw parse_error(name, lineno, "bad edge line: " + line);
            edges.emplace_back(i, j);
        }
        try {
            view.local = Graph::from_edges(k, edges);
        } catch (const param_error& e) {
            throw parse_error(name, lineno, e.what());
        }
        if (std::string(pos_buf) != "?") {
            int pos = std::atoi(pos_buf);
            if (pos < 0 || pos >= k) throw parse_error(name, view_line, "center_pos out of range");
            view.center_pos = pos;
        } else if (c.labeled) {
            throw parse_error(name, view_line, "labeled collection is missing center_pos");
        }
        if (c.labeled) detail::validate_view(view, r, name, view_line);
        c.views.push_back(std::move(view));
    }
    return c;
}

inline NeighborhoodCollection load_collection_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open for reading: " + path);
    return load_collection(is, path);
}

}  // namespace shotgun
