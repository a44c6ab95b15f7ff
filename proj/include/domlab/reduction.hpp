#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>

#include "domlab/audit.hpp"
#include "domlab/budget.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// Center followed by three pairwise non-adjacent neighbors.
using Claw = std::array<Vertex, 4>;

/// Lexicographically first induced K_{1,3}.
std::optional<Claw> find_induced_claw(const Graph& g);

/// Two adjacent core vertices of degree >= 3 and the closed neighborhood
/// N[v1] u N[v2] they span.
struct ForbiddenI {
    Vertex v1 = 0;
    Vertex v2 = 0;
    VertexSet closed_neighborhood;
};

/// Lexicographically first adjacent pair with both degrees >= 3.
std::optional<ForbiddenI> find_forbidden_I(const Graph& g);

/// Edges v1v2 with both ends outside x, both inside x, or exactly one end v1
/// in x while the other end has a further x-neighbor.
EdgeSet compute_U(const Graph& g, const VertexSet& x);

/// Whether x still dominates after removing every edge of u_prime at once.
/// Requires u_prime to be a subset of compute_U(g, x).
AuditVerdict check_fact_U(const Graph& g, const VertexSet& x, const EdgeSet& u_prime);

/// Greedy subset of U(x), in edge order, whose removal keeps x dominating.
EdgeSet safe_U_subset(const Graph& g, const VertexSet& x);

/// Union over t in y of the neighbors b of t with (N[b] \ {t}) disjoint from y.
VertexSet compute_T(const Graph& g, const VertexSet& y);

struct STransformResult {
    Graph graph;
    /// (v1, t2) -> subdividing vertex, t2 being the neighbor of v1 at the time
    /// v1 was processed (possibly an earlier subdivision vertex).
    std::map<std::pair<Vertex, Vertex>, Vertex> new_vertices;
    EdgeSet deleted_edges;
};

/// For each v1 in s (ascending): delete v1t1 where t1 is the smallest
/// y-neighbor, then subdivide every other edge currently at v1. New vertex
/// ids are appended after n - 1.
STransformResult apply_S_transform(const Graph& g, const VertexSet& y, const VertexSet& s);

/// Vacuous when y does not dominate g - t_prime; otherwise holds iff
/// y u t_prime dominates the transformed graph.
AuditVerdict check_fact_T(const Graph& g, const VertexSet& y, const VertexSet& t_prime);

/// For every induced edge v1v2 of x and every other w in x,
/// N[{v1, v2}] and N[w] are disjoint. Requires max degree <= 3.
AuditVerdict check_lemma_disjoint(const Graph& g, const VertexSet& x);

/// Connected cubic graphs only: if gamma > ceil(n/3) then gamma = i.
AuditVerdict check_theorem_T1(const Graph& g, const Deadline& deadline = {});

/// Connected cubic graphs only: gamma <= ceil(n/3).
AuditVerdict check_reed_bound(const Graph& g, const Deadline& deadline = {});

/// Claw-free graphs satisfy gamma = i; vacuous when a claw exists.
AuditVerdict audit_claw_free(const Graph& g, const Deadline& deadline = {});

/// Graphs without an adjacent pair of degree >= 3 satisfy gamma = i;
/// vacuous when such a pair exists.
AuditVerdict audit_no_forbidden_I(const Graph& g, const Deadline& deadline = {});

inline int reed_bound(int n) { return (n + 2) / 3; }

}  // namespace domlab
