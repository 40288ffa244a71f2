#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shotgun/errors.hpp"
#include "shotgun/graph.hpp"
#include "shotgun/iso.hpp"
#include "shotgun/shred.hpp"

namespace shotgun {

enum class AssemblyStatus { ExactSuccess, Ambiguous, Failed };

inline const char* to_string(AssemblyStatus s) {
    switch (s) {
        case AssemblyStatus::ExactSuccess: return "exact_success";
        case AssemblyStatus::Ambiguous: return "ambiguous";
        case AssemblyStatus::Failed: return "failed";
    }
    return "?";
}

struct AssemblyDiagnostics {
    std::size_t fingerprint_count = 0;
    std::size_t collision_classes = 0;  // certificate classes not matched exactly twice
    std::size_t collision_entries = 0;  // fingerprints stranded in those classes
    std::size_t degree_mismatches = 0;  // centers whose output degree differs from their view
    std::size_t undersized_views = 0;   // diameter-2 path: views smaller than n
    std::size_t unmatched_centers = 0;  // diameter-2 path: centers without a unique slot
    std::string note;
};

// Result of any assembler: a (possibly partial) reconstruction plus an
// honest status. ExactSuccess is only reported when every internal
// uniqueness hypothesis held; a collision degrades to Ambiguous rather than
// guessing.
struct AssemblyOutcome {
    Graph graph;
    AssemblyStatus status = AssemblyStatus::Failed;
    AssemblyDiagnostics diagnostics;
};

namespace detail {

struct FingerprintEntry {
    int center = -1;
    int neighbor_pos = -1;
    std::string cert_bytes;
};

// The certificate join shared by the radius-1 and radius-2 fingerprint
// assemblers. Fingerprints of a true edge appear once from each endpoint's
// view with equal certificates, so a certificate class of size exactly two
// identifies one edge. Classes of any other size are collisions: the
// pairwise declaration rule would fabricate edges there, so they are dropped
// and reported instead.
inline AssemblyOutcome join_by_certificate(int n, const std::vector<FingerprintEntry>& entries,
                                           const std::vector<int>& center_degrees) {
    AssemblyOutcome out;
    out.diagnostics.fingerprint_count = entries.size();
    std::map<std::string, std::vector<const FingerprintEntry*>> classes;
    for (const auto& e : entries) classes[e.cert_bytes].push_back(&e);

    std::vector<std::pair<int, int>> edges;
    for (const auto& [bytes, members] : classes) {
        if (members.size() == 2 && members[0]->center != members[1]->center) {
            int u = members[0]->center;
            int v = members[1]->center;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        } else {
            ++out.diagnostics.collision_classes;
            out.diagnostics.collision_entries += members.size();
        }
    }
    out.graph = Graph::from_edges(n, edges);
    for (int v = 0; v < n; ++v)
        if (out.graph.degree(v) != center_degrees[static_cast<std::size_t>(v)])
            ++out.diagnostics.degree_mismatches;
    out.status = (out.diagnostics.collision_classes == 0 && out.diagnostics.degree_mismatches == 0)
                     ? AssemblyStatus::ExactSuccess
                     : AssemblyStatus::Ambiguous;
    return out;
}

inline void require_labeled(const NeighborhoodCollection& c, int radius, const char* who) {
    if (c.radius != radius)
        throw param_error(std::string(who) + ": collection radius must be " +
                          std::to_string(radius));
    if (static_cast<int>(c.views.size()) != c.n)
        throw param_error(std::string(who) + ": collection must contain one view per vertex");
    for (const auto& view : c.views)
        if (!view.center || !view.center_pos)
            throw param_error(std::string(who) +
                              ": views must carry centers (recover them first)");
}

}  // namespace detail

}  // namespace shotgun
