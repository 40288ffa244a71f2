#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shotgun/assemble.hpp"

namespace shotgun {

// Fingerprint of one edge seen from one endpoint: the certificate of the
// subgraph induced by the common neighbors of the center and one of its
// neighbors. Every common neighbor of adjacent u, u0 lies inside view(u),
// together with all edges among them, so the fingerprint is computable
// entirely in-view and is symmetric across the edge.
struct EdgeFingerprint {
    int center = -1;
    int neighbor_pos = -1;
    Certificate cert;
};

inline std::vector<EdgeFingerprint> edge_fingerprints(const NeighborhoodView& view,
                                                      const CertOptions& opts = {}) {
    if (view.radius != 1) throw param_error("edge_fingerprints requires a radius-1 view");
    if (!view.center || !view.center_pos)
        throw param_error("edge_fingerprints requires a known center");
    std::vector<EdgeFingerprint> out;
    const int c = *view.center_pos;
    for (int a : view.local.neighbors(c)) {
        auto shared = common_neighbors(view.local, c, a);
        auto sub = induced_subgraph(view.local, shared);
        out.push_back({*view.center, a, certificate(sub.graph, opts)});
    }
    return out;
}

// Reconstruction from 1-neighborhoods: extract every edge fingerprint, join
// by certificate, keep classes matched exactly twice across distinct
// centers. Exact success additionally requires each center's reconstructed
// degree to equal its view degree.
inline AssemblyOutcome assemble_from_1nbhd(const NeighborhoodCollection& c,
                                           const CertOptions& opts = {}) {
    detail::require_labeled(c, 1, "assemble_from_1nbhd");
    std::vector<detail::FingerprintEntry> entries;
    std::vector<int> center_degrees(static_cast<std::size_t>(c.n), 0);
    for (const auto& view : c.views) {
        center_degrees[static_cast<std::size_t>(*view.center)] =
            view.local.degree(*view.center_pos);
        try {
            for (auto& fp : edge_fingerprints(view, opts))
                entries.push_back({fp.center, fp.neighbor_pos, fp.cert.bytes()});
        } catch (const resource_error& e) {
            AssemblyOutcome out;
            out.graph = Graph(c.n);
            out.status = AssemblyStatus::Failed;
            out.diagnostics.note = e.what();
            return out;
        }
    }
    return detail::join_by_certificate(c.n, entries, center_degrees);
}

}  // namespace shotgun
