#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "domlab/budget.hpp"
#include "domlab/graph.hpp"

namespace domlab {

using Path = std::vector<Vertex>;

/// Simple cycle in canonical form: smallest id first, then the smaller of
/// its two neighbors.
struct Cycle {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Rotates and reflects a cyclic vertex sequence into canonical form.
Cycle canonical_cycle(std::vector<Vertex> cyclic);

/// Length >= 3, distinct vertices, consecutive (and last-first) adjacent, canonical.
bool is_valid_cycle(const Graph& g, const Cycle& c);

EdgeSet cycle_edges(const Cycle& c);

struct CycleEnumeration {
    std::vector<Cycle> cycles;
    bool truncated = false;
};

/// Every simple cycle whose length is divisible by 3, canonical and in
/// lexicographic order, at most `limit` (backtracking; meant for n <= 20).
CycleEnumeration enumerate_mod3_cycles(const Graph& g, std::size_t limit, const Deadline& deadline = {});

/// Same traversal without the length filter.
CycleEnumeration enumerate_cycles(const Graph& g, std::size_t limit, const Deadline& deadline = {});

/// Shortest cycle of length divisible by 3, lexicographically first among
/// those of that length.
std::optional<Cycle> find_mod3_cycle(const Graph& g, const Deadline& deadline = {});

enum class SearchStatus { found, absent, budget_exhausted };

struct PathSearch {
    SearchStatus status = SearchStatus::absent;
    std::optional<Path> path;
};

/// Depth-first search (ascending neighbor order) for a simple u-v path with
/// length = r (mod 3). When `interior` is given every inner vertex must lie in
/// it and the path needs at least one inner vertex. `budget` caps node
/// expansions; "absent" is only reported when the search completed.
PathSearch find_path_mod_r(const Graph& g, Vertex u, Vertex v, int r, std::int64_t budget,
                           const std::optional<VertexSet>& interior = {});

/// Two paths t0..u0 and t0..v0 meeting only in t0, or none.
std::optional<std::pair<Path, Path>> find_fan_paths(const Graph& g, Vertex t0, Vertex u0, Vertex v0);

/// The members of x occupy exactly one residue class of path positions
/// (the class may be empty on paths with fewer than three vertices).
bool is_x3_path(const Path& p, const VertexSet& x);

/// Every window of three consecutive cycle vertices holds exactly one member
/// of x. Throws std::invalid_argument when the length is not divisible by 3.
bool check_x3_assignment(const Cycle& c, const VertexSet& x);

}  // namespace domlab
