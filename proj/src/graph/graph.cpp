#include "domlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace domlab {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (!g.contains(e.u) || !g.contains(e.v))
            throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " out of range for n=" + std::to_string(n));
        g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("duplicate edge");
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& na = neighbors(a);
    return std::binary_search(na.begin(), na.end(), b);
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int best = order();
    for (const auto& nbrs : adj_) best = std::min(best, static_cast<int>(nbrs.size()));
    return best;
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    VertexSet out = neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

VertexSet Graph::open_neighborhood(const VertexSet& w) const {
    std::vector<Vertex> out;
    for (Vertex v : w) out.insert(out.end(), neighbors(v).begin(), neighbors(v).end());
    return make_vertex_set(std::move(out));
}

VertexSet Graph::closed_neighborhood(const VertexSet& w) const {
    return set_union(open_neighborhood(w), w);
}

bool Graph::valid() const {
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < order(); ++u) {
        const auto& nbrs = neighbors(u);
        degree_sum += nbrs.size();
        if (!std::is_sorted(nbrs.begin(), nbrs.end())) return false;
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
        for (Vertex v : nbrs) {
            if (v == u || !contains(v)) return false;
            if (!has_edge(v, u)) return false;
        }
    }
    return degree_sum == 2 * edge_count_;
}

Graph delete_edges(const Graph& g, const EdgeSet& es) {
    for (const Edge& e : es)
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("not an edge: " + std::to_string(e.u) + "-" + std::to_string(e.v));
    EdgeSet kept;
    const EdgeSet removed = make_edge_set(es);
    for (const Edge& e : g.edges())
        if (!contains(removed, e)) kept.push_back(e);
    return Graph::from_edges(g.order(), kept);
}

InducedGraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    check_members(g, keep);
    std::vector<Vertex> remap(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) remap[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
    EdgeSet kept;
    for (const Edge& e : g.edges()) {
        Vertex a = remap[static_cast<std::size_t>(e.u)];
        Vertex b = remap[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) kept.emplace_back(a, b);
    }
    std::sort(kept.begin(), kept.end());
    return {Graph::from_edges(static_cast<int>(keep.size()), kept), keep};
}

InducedGraph delete_vertices(const Graph& g, const VertexSet& vs) {
    check_members(g, vs);
    VertexSet keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!contains(vs, v)) keep.push_back(v);
    return induced_subgraph(g, keep);
}

VertexSet all_vertices(const Graph& g) {
    VertexSet out(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = v;
    return out;
}

VertexSet make_vertex_set(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

EdgeSet make_edge_set(std::vector<Edge> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

bool contains(const EdgeSet& s, const Edge& e) { return std::binary_search(s.begin(), s.end(), e); }

void check_members(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (!g.contains(v))
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(g.order()));
}

std::vector<Mask> closed_masks(const Graph& g) {
    std::vector<Mask> out = open_masks(g);
    for (Vertex v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] |= Mask{1} << v;
    return out;
}

std::vector<Mask> open_masks(const Graph& g) {
    if (g.order() > 64) throw CapacityError("bitset kernels support at most 64 vertices, got " + std::to_string(g.order()));
    std::vector<Mask> out(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex u : g.neighbors(v)) out[static_cast<std::size_t>(v)] |= Mask{1} << u;
    return out;
}

Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (Vertex v : s) {
        if (v < 0 || v >= 64) throw CapacityError("vertex id outside bitset range");
        m |= Mask{1} << v;
    }
    return m;
}

VertexSet from_mask(Mask m) {
    VertexSet out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& s) {
    std::size_t count = 0;
    for (Vertex u : s)
        for (Vertex v : g.neighbors(u))
            if (u < v && contains(s, v)) ++count;
    return count;
}

bool is_independent(const Graph& g, const VertexSet& s) { return induced_edge_count(g, s) == 0; }

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

}  // namespace domlab
