#pragma once

#include <optional>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

/// n = 0 counts as connected.
bool is_connected(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Components of the subgraph induced on `allowed`, in original ids.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& allowed);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t);

/// Menger: minimum local connectivity over non-adjacent pairs; K_n gives n-1.
/// Requires n >= 1.
int vertex_connectivity(const Graph& g);

/// Vertex-disjoint paths (sharing only `source`) from source to distinct
/// members of `sinks`, as many as max-flow allows up to `want`. Paths run
/// inside `allowed` when given; source and sinks are always usable.
std::vector<std::vector<Vertex>> disjoint_paths_to_set(const Graph& g, Vertex source, const VertexSet& sinks,
                                                      int want, const std::optional<VertexSet>& allowed = {});

bool is_cubic(const Graph& g);

}  // namespace domlab
