#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace domlab {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of edges.
using EdgeSet = std::vector<Edge>;

/// Bitset over at most 64 vertices, bit i = vertex i.
using Mask = std::uint64_t;

class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Values are immutable once built; every edit returns a new graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Throws std::invalid_argument on loops, duplicate edges or ids out of range.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex a, Vertex b) const;
    bool contains(Vertex v) const { return v >= 0 && v < order(); }

    int max_degree() const;
    int min_degree() const;

    /// All edges in lexicographic order.
    EdgeSet edges() const;

    VertexSet closed_neighborhood(Vertex v) const;
    VertexSet open_neighborhood(const VertexSet& w) const;
    VertexSet closed_neighborhood(const VertexSet& w) const;

    /// Checks symmetry, loop-freeness, range and duplicate-freeness.
    bool valid() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// A graph obtained by deleting vertices, with `original[i]` the id vertex i had before.
struct InducedGraph {
    Graph graph;
    std::vector<Vertex> original;
};

Graph delete_edges(const Graph& g, const EdgeSet& es);
InducedGraph delete_vertices(const Graph& g, const VertexSet& vs);
InducedGraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Vertex set helpers. Inputs are assumed normalized.
VertexSet all_vertices(const Graph& g);
VertexSet make_vertex_set(std::vector<Vertex> members);
bool contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
EdgeSet make_edge_set(std::vector<Edge> members);
bool contains(const EdgeSet& s, const Edge& e);

/// Throws std::out_of_range naming the first member outside 0..n-1.
void check_members(const Graph& g, const VertexSet& s);

// Bitset kernels; throw CapacityError when n > 64.
std::vector<Mask> closed_masks(const Graph& g);
std::vector<Mask> open_masks(const Graph& g);
Mask to_mask(const VertexSet& s);
VertexSet from_mask(Mask m);

/// Number of edges with both endpoints in s.
std::size_t induced_edge_count(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

std::string to_string(const VertexSet& s);

}  // namespace domlab
