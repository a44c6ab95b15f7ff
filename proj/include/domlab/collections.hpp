#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "domlab/budget.hpp"
#include "domlab/cycles.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// Seamless connection: `derived` is `base` with the arc `replaced_arc`
/// swapped for `ear`. Both paths run between the same endpoints v1 < v2 and
/// are oriented from v1; the inner vertices of the ear avoid the base cycle.
struct EarLink {
    std::size_t base = 0;
    std::size_t derived = 0;
    Path ear;
    Path replaced_arc;
};

/// Link between two 0 mod 3 cycles, if one is the other with one arc
/// swapped for one ear. Indices are left at zero for the caller to fill.
std::optional<EarLink> find_ear_link(const Cycle& base, const Cycle& derived);

/// Rebuilds the derived cycle from the base and the link.
Cycle replay_link(const Cycle& base, const EarLink& link);

enum class CollectionKind { CSG, DSG };

std::string to_string(CollectionKind kind);

/// Seamlessly linked family of 0 mod 3 cycles with a connected link graph.
struct CycleCollection {
    std::vector<Cycle> cycles;
    std::vector<EarLink> links;
    CollectionKind kind = CollectionKind::CSG;
    VertexSet vertex_union;
};

/// Edges used by the member cycles.
EdgeSet collection_edges(const CycleCollection& c);

/// Vertices lying on exactly one member cycle.
VertexSet exclusive_vertices(const CycleCollection& c, std::size_t cycle_index);

bool link_graph_connected(const CycleCollection& c);

struct CollectionOptions {
    std::size_t cycle_limit = 20000;
    Deadline deadline{};
};

struct CsgResult {
    std::vector<CycleCollection> collections;
    /// True when the cycle enumeration hit `cycle_limit`; families may then
    /// be incomplete.
    bool truncated = false;
};

/// Maximal seamlessly linked families: components of the link graph over
/// all 0 mod 3 cycles, ordered by their first cycle.
CsgResult build_CSG(const Graph& g, const CollectionOptions& options = {});

/// Drops, one at a time, the lexicographically smallest cycle that has no
/// exclusive vertex, until none is left; the link graph is then re-split
/// into connected pieces, each of kind DSG.
std::vector<CycleCollection> build_DSG(const CycleCollection& c);

/// Member vertex sets that meet every cycle in exactly one residue class of
/// positions and agree on shared vertices, sorted lexicographically.
struct X3Assignments {
    std::vector<VertexSet> sets;
    bool truncated = false;
};

X3Assignments enumerate_x3_assignments(const CycleCollection& c, std::size_t limit = 100000,
                                       const Deadline& deadline = {});

/// Lexicographically smallest consistent assignment, if any.
std::optional<VertexSet> assign_x3(const CycleCollection& c);

}  // namespace domlab
