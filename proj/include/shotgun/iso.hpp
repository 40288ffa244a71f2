#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shotgun/errors.hpp"
#include "shotgun/graph.hpp"

namespace shotgun {

struct CertOptions {
    // Guard against adversarially symmetric inputs; typical fingerprint
    // graphs are far below both limits.
    int max_vertices = 5000;
    std::uint64_t max_steps = 1u << 22;
};

// Canonical byte string of a graph's isomorphism class. Equality of
// certificates is equivalent to isomorphism; no other structure of the
// encoding is part of the public contract.
class Certificate {
public:
    Certificate() = default;
    explicit Certificate(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }

    friend bool operator==(const Certificate&, const Certificate&) = default;
    friend auto operator<=>(const Certificate& a, const Certificate& b) {
        return a.bytes_ <=> b.bytes_;
    }

private:
    std::string bytes_;
};

namespace detail {

// Bit string with MSB-first packing, so lexicographic comparison of the
// byte representation equals lexicographic comparison of the bits.
struct BitString {
    std::string bytes;
    std::size_t bit_len = 0;

    void push(bool b) {
        const std::size_t byte = bit_len >> 3;
        if (byte == bytes.size()) bytes.push_back('\0');
        if (b) bytes[byte] = static_cast<char>(bytes[byte] | (0x80u >> (bit_len & 7)));
        ++bit_len;
    }
};

// -1 if the first `bits` bits of a are lexicographically below those of b.
inline int compare_bits(const std::string& a, const std::string& b, std::size_t bits) {
    const std::size_t full = bits >> 3;
    for (std::size_t i = 0; i < full; ++i) {
        auto x = static_cast<unsigned char>(a[i]);
        auto y = static_cast<unsigned char>(b[i]);
        if (x != y) return x < y ? -1 : 1;
    }
    const std::size_t rem = bits & 7;
    if (rem) {
        const unsigned mask = 0xFFu << (8 - rem);
        auto x = static_cast<unsigned char>(a[full]) & mask;
        auto y = static_cast<unsigned char>(b[full]) & mask;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

// Canonical form of one connected component via individualization and
// refinement. The search minimizes the column-major upper-triangle adjacency
// bit string over all leaves of the refinement tree; the target cell (first
// non-singleton) and the cell ordering produced by refinement depend only on
// isomorphism-invariant data, so the minimum is a canonical form.
//
// Two prunings keep symmetric inputs tractable:
//  - twin pruning: vertices with equal (open or closed) neighborhoods are
//    interchangeable by a transposition automorphism, so only one member of
//    a twin class is tried per node. This collapses stars, cliques and
//    isolated-vertex clusters from factorial to linear work.
//  - prefix pruning: once the leading singleton cells determine more bits
//    than the incumbent over the same positions, compare and cut.
class ComponentCanonizer {
public:
    ComponentCanonizer(const Graph& g, const std::vector<int>& vertices,
                       const CertOptions& opts)
        : k_(static_cast<int>(vertices.size())), opts_(opts) {
        adj_.assign(static_cast<std::size_t>(k_), {});
        words_per_row_ = (static_cast<std::size_t>(k_) + 63) / 64;
        bits_.assign(static_cast<std::size_t>(k_) * words_per_row_, 0);
        std::vector<int> local_of;  // sparse map original -> local
        local_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
        for (int i = 0; i < k_; ++i) local_of[static_cast<std::size_t>(vertices[static_cast<std::size_t>(i)])] = i;
        for (int i = 0; i < k_; ++i) {
            for (int w : g.neighbors(vertices[static_cast<std::size_t>(i)])) {
                int j = local_of[static_cast<std::size_t>(w)];
                if (j >= 0) {
                    adj_[static_cast<std::size_t>(i)].push_back(j);
                    set_bit(i, j);
                }
            }
            std::sort(adj_[static_cast<std::size_t>(i)].begin(), adj_[static_cast<std::size_t>(i)].end());
        }
        compute_twin_classes();
    }

    std::string canonical_bits() {
        Partition root;
        root.color.assign(static_cast<std::size_t>(k_), 0);
        root.cells = {std::vector<int>(static_cast<std::size_t>(k_))};
        for (int i = 0; i < k_; ++i) root.cells[0][static_cast<std::size_t>(i)] = i;
        refine(root);
        best_.clear();
        have_best_ = false;
        search(root);
        return best_;
    }

private:
    struct Partition {
        std::vector<int> color;               // vertex -> cell index
        std::vector<std::vector<int>> cells;  // ordered cells
    };

    bool adjacent(int u, int v) const {
        return bits_[static_cast<std::size_t>(u) * words_per_row_ + static_cast<std::size_t>(v >> 6)] >>
                   (v & 63) &
               1;
    }

    void set_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_per_row_ + static_cast<std::size_t>(v >> 6)] |=
            std::uint64_t{1} << (v & 63);
    }

    void compute_twin_classes() {
        twin_class_.assign(static_cast<std::size_t>(k_), 0);
        for (int v = 0; v < k_; ++v) twin_class_[static_cast<std::size_t>(v)] = v;
        std::map<std::vector<int>, int> open_groups, closed_groups;
        for (int v = 0; v < k_; ++v) {
            auto& nv = adj_[static_cast<std::size_t>(v)];
            auto [it, fresh] = open_groups.try_emplace(nv, v);
            if (!fresh) unite(it->second, v);
            std::vector<int> closed = nv;
            closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
            auto [jt, fresh2] = closed_groups.try_emplace(std::move(closed), v);
            if (!fresh2) unite(jt->second, v);
        }
    }

    int find(int v) {
        while (twin_class_[static_cast<std::size_t>(v)] != v) {
            twin_class_[static_cast<std::size_t>(v)] =
                twin_class_[static_cast<std::size_t>(twin_class_[static_cast<std::size_t>(v)])];
            v = twin_class_[static_cast<std::size_t>(v)];
        }
        return v;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) twin_class_[static_cast<std::size_t>(b)] = a;
    }

    // Coarsest equitable refinement; cells reordered each round by
    // (previous color, sorted neighbor colors), which is invariant data.
    void refine(Partition& p) {
        if (++steps_ > opts_.max_steps)
            throw resource_error("certificate search exceeded step budget");
        while (true) {
            std::vector<std::vector<int>> sig(static_cast<std::size_t>(k_));
            for (int v = 0; v < k_; ++v) {
                auto& s = sig[static_cast<std::size_t>(v)];
                s.reserve(adj_[static_cast<std::size_t>(v)].size());
                for (int w : adj_[static_cast<std::size_t>(v)])
                    s.push_back(p.color[static_cast<std::size_t>(w)]);
                std::sort(s.begin(), s.end());
            }
            std::vector<int> verts(static_cast<std::size_t>(k_));
            for (int i = 0; i < k_; ++i) verts[static_cast<std::size_t>(i)] = i;
            std::sort(verts.begin(), verts.end(), [&](int a, int b) {
                if (p.color[static_cast<std::size_t>(a)] != p.color[static_cast<std::size_t>(b)])
                    return p.color[static_cast<std::size_t>(a)] < p.color[static_cast<std::size_t>(b)];
                return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
            });
            std::vector<std::vector<int>> cells;
            for (std::size_t i = 0; i < verts.size(); ++i) {
                int v = verts[i];
                if (i == 0 ||
                    p.color[static_cast<std::size_t>(v)] != p.color[static_cast<std::size_t>(verts[i - 1])] ||
                    sig[static_cast<std::size_t>(v)] != sig[static_cast<std::size_t>(verts[i - 1])])
                    cells.emplace_back();
                cells.back().push_back(v);
            }
            const bool stable = cells.size() == p.cells.size();
            p.cells = std::move(cells);
            for (std::size_t c = 0; c < p.cells.size(); ++c)
                for (int v : p.cells[c]) p.color[static_cast<std::size_t>(v)] = static_cast<int>(c);
            if (stable) return;
        }
    }

    // Bits among the first `fixed` labels, column-major: column j contributes
    // bits (0,j)...(j-1,j). Prefixes of the leaf encoding by construction.
    std::string encode_prefix(const Partition& p, int fixed, std::size_t& bit_len) const {
        BitString bs;
        for (int j = 1; j < fixed; ++j) {
            int vj = p.cells[static_cast<std::size_t>(j)][0];
            for (int i = 0; i < j; ++i)
                bs.push(adjacent(p.cells[static_cast<std::size_t>(i)][0], vj));
        }
        bit_len = bs.bit_len;
        return std::move(bs.bytes);
    }

    void search(const Partition& p) {
        int fixed = 0;
        while (fixed < static_cast<int>(p.cells.size()) &&
               p.cells[static_cast<std::size_t>(fixed)].size() == 1)
            ++fixed;

        if (have_best_) {
            std::size_t prefix_bits = 0;
            std::string prefix = encode_prefix(p, fixed, prefix_bits);
            if (compare_bits(prefix, best_, prefix_bits) > 0) return;
        }

        if (fixed == static_cast<int>(p.cells.size())) {
            std::size_t bits = 0;
            std::string leaf = encode_prefix(p, fixed, bits);
            leaf.resize(total_bytes());  // normalize length for string compare
            if (!have_best_ || leaf < best_) {
                best_ = std::move(leaf);
                have_best_ = true;
            }
            return;
        }

        const auto& cell = p.cells[static_cast<std::size_t>(fixed)];
        std::vector<int> tried;
        for (int v : cell) {
            int cls = find(v);
            if (std::find(tried.begin(), tried.end(), cls) != tried.end()) continue;
            tried.push_back(cls);
            Partition child;
            child.color = p.color;
            child.cells.reserve(p.cells.size() + 1);
            for (std::size_t c = 0; c < p.cells.size(); ++c) {
                if (static_cast<int>(c) != fixed) {
                    child.cells.push_back(p.cells[c]);
                    continue;
                }
                child.cells.push_back({v});
                std::vector<int> rest;
                rest.reserve(cell.size() - 1);
                for (int w : cell)
                    if (w != v) rest.push_back(w);
                child.cells.push_back(std::move(rest));
            }
            for (std::size_t c = 0; c < child.cells.size(); ++c)
                for (int w : child.cells[c]) child.color[static_cast<std::size_t>(w)] = static_cast<int>(c);
            refine(child);
            search(child);
        }
    }

    std::size_t total_bytes() const {
        std::size_t bits = static_cast<std::size_t>(k_) * (static_cast<std::size_t>(k_) - 1) / 2;
        return (bits + 7) / 8;
    }

    int k_;
    CertOptions opts_;
    std::size_t words_per_row_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
    std::vector<int> twin_class_;
    std::string best_;
    bool have_best_ = false;
    std::uint64_t steps_ = 0;
};

inline void append_u32(std::string& s, std::uint32_t x) {
    for (int shift = 24; shift >= 0; shift -= 8)
        s.push_back(static_cast<char>(x >> shift & 0xFF));
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        comps.emplace_back();
        stack.push_back(v);
        seen[static_cast<std::size_t>(v)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comps.back().push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

}  // namespace detail

// Exact certificate: equal byte strings iff the graphs are isomorphic.
// Components are canonized independently and concatenated in sorted order,
// which both keeps the encoding canonical and prevents symmetric unions
// (isolated vertices, matchings) from inflating the search.
inline Certificate certificate(const Graph& g, const CertOptions& opts = {}) {
    if (g.vertex_count() > opts.max_vertices)
        throw resource_error("certificate: graph exceeds size bound of " +
                             std::to_string(opts.max_vertices) + " vertices");
    auto comps = detail::connected_components(g);
    std::vector<std::string> blocks;
    blocks.reserve(comps.size());
    for (const auto& comp : comps) {
        detail::ComponentCanonizer canon(g, comp, opts);
        std::string block;
        detail::append_u32(block, static_cast<std::uint32_t>(comp.size()));
        block += canon.canonical_bits();
        blocks.push_back(std::move(block));
    }
    std::sort(blocks.begin(), blocks.end());
    std::string bytes;
    detail::append_u32(bytes, static_cast<std::uint32_t>(g.vertex_count()));
    detail::append_u32(bytes, static_cast<std::uint32_t>(blocks.size()));
    for (const auto& b : blocks) bytes += b;
    return Certificate(std::move(bytes));
}

inline bool is_isomorphic(const Graph& g, const Graph& h, const CertOptions& opts = {}) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    auto degrees = [](const Graph& x) {
        std::vector<int> d(static_cast<std::size_t>(x.vertex_count()));
        for (int v = 0; v < x.vertex_count(); ++v) d[static_cast<std::size_t>(v)] = x.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(g) != degrees(h)) return false;
    return certificate(g, opts) == certificate(h, opts);
}

// A vertex's degree together with the ascending multiset of its neighbors'
// degrees. Comparison is degree first, then neighbor_degrees element-wise,
// which fixes the lexicographic order used by canonical_labeling.
struct DegreeNeighborhood {
    int degree = 0;
    std::vector<int> neighbor_degrees;

    friend auto operator<=>(const DegreeNeighborhood&, const DegreeNeighborhood&) = default;
};

inline DegreeNeighborhood degree_neighborhood(const Graph& g, int v) {
    DegreeNeighborhood dn;
    dn.degree = g.degree(v);
    dn.neighbor_degrees.reserve(static_cast<std::size_t>(dn.degree));
    for (int w : g.neighbors(v)) dn.neighbor_degrees.push_back(g.degree(w));
    std::sort(dn.neighbor_degrees.begin(), dn.neighbor_degrees.end());
    return dn;
}

// Vertices sorted ascending by degree neighborhood. Fails (with one
// colliding pair) when any two vertices share a degree neighborhood; ties
// are refused rather than broken since downstream exact reconstruction is
// only guaranteed under distinctness.
struct CanonicalLabelingResult {
    std::vector<int> order;  // filled on success: order[k] = vertex at rank k
    std::optional<std::pair<int, int>> collision;

    bool ok() const { return !collision.has_value(); }
};

inline CanonicalLabelingResult canonical_labeling(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<DegreeNeighborhood> dns;
    dns.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) dns.push_back(degree_neighborhood(g, v));
    CanonicalLabelingResult result;
    result.order.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) result.order[static_cast<std::size_t>(v)] = v;
    std::sort(result.order.begin(), result.order.end(), [&](int a, int b) {
        const auto& da = dns[static_cast<std::size_t>(a)];
        const auto& db = dns[static_cast<std::size_t>(b)];
        if (da != db) return da < db;
        return a < b;
    });
    for (int k = 0; k + 1 < n; ++k) {
        int a = result.order[static_cast<std::size_t>(k)];
        int b = result.order[static_cast<std::size_t>(k + 1)];
        if (dns[static_cast<std::size_t>(a)] == dns[static_cast<std::size_t>(b)]) {
            result.collision = std::make_pair(std::min(a, b), std::max(a, b));
            result.order.clear();
            return result;
        }
    }
    return result;
}

}  // namespace shotgun
