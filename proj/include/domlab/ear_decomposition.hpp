#pragma once

#include <vector>

#include "domlab/cycles.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// Initial cycle followed by paths whose endpoints (and only those) lie in
/// the part already built.
struct EarDecomposition {
    Cycle initial;
    std::vector<Path> ears;
};

/// Deterministic open ear decomposition. The initial cycle is the shortest
/// one through vertex 0 and its smallest neighbor; each next ear starts at
/// the lexicographically first unused edge leaving the built part and
/// continues by BFS to the nearest built vertex other than its start.
/// Throws std::invalid_argument when g is not 2-connected.
EarDecomposition ear_decomposition(const Graph& g);

/// Rebuilds the union of the initial cycle and all ears on `order` vertices.
Graph reassemble(const EarDecomposition& d, int order);

}  // namespace domlab
