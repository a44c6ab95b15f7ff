#include "domlab/collections.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace domlab {

namespace {

// Orders the edges of a simple path from its smaller endpoint; empty when
// the edges do not form exactly one path.
Path edges_to_path(const EdgeSet& edges) {
    if (edges.empty()) return {};
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<Vertex> ends;
    for (const auto& [v, nb] : adj) {
        if (nb.size() == 1)
            ends.push_back(v);
        else if (nb.size() != 2)
            return {};
    }
    if (ends.size() != 2) return {};
    Path p{ends[0]};
    Vertex prev = -1;
    while (p.size() <= edges.size()) {
        const auto& nb = adj[p.back()];
        Vertex next = -1;
        for (Vertex w : nb)
            if (w != prev) next = w;
        if (next < 0) break;
        prev = p.back();
        p.push_back(next);
        if (adj[next].size() == 1) break;
    }
    if (p.size() != edges.size() + 1) return {};
    return p;
}

EdgeSet difference(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool inner_vertices_avoid(const Path& p, const VertexSet& vs) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (contains(vs, p[i])) return false;
    return true;
}

}  // namespace

namespace {

std::optional<EarLink> link_from_edges(const Cycle& base, const EdgeSet& eb, const Cycle& derived, const EdgeSet& ed) {
    if (base.length() % 3 != 0 || derived.length() % 3 != 0 || base == derived) return std::nullopt;
    Path ear = edges_to_path(difference(ed, eb));
    if (ear.empty()) return std::nullopt;
    Path arc = edges_to_path(difference(eb, ed));
    if (arc.empty()) return std::nullopt;
    if (ear.front() != arc.front() || ear.back() != arc.back()) return std::nullopt;
    if (!inner_vertices_avoid(ear, make_vertex_set(base.vertices))) return std::nullopt;
    if (!inner_vertices_avoid(arc, make_vertex_set(derived.vertices))) return std::nullopt;
    return EarLink{0, 0, std::move(ear), std::move(arc)};
}

}  // namespace

std::optional<EarLink> find_ear_link(const Cycle& base, const Cycle& derived) {
    return link_from_edges(base, cycle_edges(base), derived, cycle_edges(derived));
}

Cycle replay_link(const Cycle& base, const EarLink& link) {
    const auto& b = base.vertices;
    const auto len = static_cast<long>(b.size());
    const auto& arc = link.replaced_arc;
    if (arc.size() < 2 || link.ear.size() < 2) throw std::invalid_argument("degenerate link");
    const long start = std::find(b.begin(), b.end(), arc.front()) - b.begin();
    if (start == len) throw std::invalid_argument("arc does not start on the base cycle");
    const long dir = b[static_cast<std::size_t>((start + 1) % len)] == arc[1] ? 1 : -1;
    auto at = [&](long i) { return b[static_cast<std::size_t>(((i % len) + len) % len)]; };
    for (std::size_t k = 0; k < arc.size(); ++k)
        if (at(start + dir * static_cast<long>(k)) != arc[k]) throw std::invalid_argument("arc is not a base-cycle arc");

    // Kept arc: from the far arc endpoint around to the near one, then the ear back.
    std::vector<Vertex> out;
    const long far = start + dir * static_cast<long>(arc.size() - 1);
    for (long k = 0; k <= len - static_cast<long>(arc.size() - 1); ++k) out.push_back(at(far + dir * k));
    for (std::size_t k = 1; k + 1 < link.ear.size(); ++k) out.push_back(link.ear[k]);
    return canonical_cycle(std::move(out));
}

std::string to_string(CollectionKind kind) { return kind == CollectionKind::CSG ? "CSG" : "DSG"; }

EdgeSet collection_edges(const CycleCollection& c) {
    std::vector<Edge> all;
    for (const Cycle& cyc : c.cycles) {
        EdgeSet e = cycle_edges(cyc);
        all.insert(all.end(), e.begin(), e.end());
    }
    return make_edge_set(std::move(all));
}

VertexSet exclusive_vertices(const CycleCollection& c, std::size_t cycle_index) {
    VertexSet out;
    for (Vertex v : c.cycles.at(cycle_index).vertices) {
        bool shared = false;
        for (std::size_t j = 0; j < c.cycles.size() && !shared; ++j)
            if (j != cycle_index) {
                const auto& vs = c.cycles[j].vertices;
                shared = std::find(vs.begin(), vs.end(), v) != vs.end();
            }
        if (!shared) out.push_back(v);
    }
    return make_vertex_set(std::move(out));
}

namespace {

std::vector<std::vector<std::size_t>> link_adjacency(const CycleCollection& c) {
    std::vector<std::vector<std::size_t>> adj(c.cycles.size());
    for (const EarLink& l : c.links) {
        adj[l.base].push_back(l.derived);
        adj[l.derived].push_back(l.base);
    }
    return adj;
}

std::vector<std::vector<std::size_t>> link_components(std::size_t count, const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<int> comp(count, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < count; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> members;
        std::queue<std::size_t> q;
        q.push(s);
        comp[s] = static_cast<int>(out.size());
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            members.push_back(u);
            for (std::size_t w : adj[u])
                if (comp[w] < 0) {
                    comp[w] = static_cast<int>(out.size());
                    q.push(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

CycleCollection restrict_to(const CycleCollection& c, const std::vector<std::size_t>& members, CollectionKind kind) {
    CycleCollection out;
    out.kind = kind;
    std::map<std::size_t, std::size_t> reindex;
    std::vector<Vertex> all;
    for (std::size_t i : members) {
        reindex[i] = out.cycles.size();
        out.cycles.push_back(c.cycles[i]);
        all.insert(all.end(), c.cycles[i].vertices.begin(), c.cycles[i].vertices.end());
    }
    for (const EarLink& l : c.links) {
        auto b = reindex.find(l.base), d = reindex.find(l.derived);
        if (b == reindex.end() || d == reindex.end()) continue;
        EarLink copy = l;
        copy.base = b->second;
        copy.derived = d->second;
        out.links.push_back(std::move(copy));
    }
    out.vertex_union = make_vertex_set(std::move(all));
    return out;
}

}  // namespace

bool link_graph_connected(const CycleCollection& c) {
    return c.cycles.size() <= 1 || link_components(c.cycles.size(), link_adjacency(c)).size() == 1;
}

CsgResult build_CSG(const Graph& g, const CollectionOptions& options) {
    const CycleEnumeration cycles = enumerate_mod3_cycles(g, options.cycle_limit, options.deadline);
    CycleCollection all;
    all.cycles = cycles.cycles;
    std::vector<EdgeSet> edges;
    for (const Cycle& c : all.cycles) edges.push_back(cycle_edges(c));
    for (std::size_t i = 0; i < all.cycles.size(); ++i)
        for (std::size_t j = i + 1; j < all.cycles.size(); ++j) {
            options.deadline.poll();
            if (auto link = link_from_edges(all.cycles[i], edges[i], all.cycles[j], edges[j])) {
                link->base = i;
                link->derived = j;
                all.links.push_back(std::move(*link));
            }
        }

    CsgResult result;
    result.truncated = cycles.truncated;
    for (const auto& members : link_components(all.cycles.size(), link_adjacency(all)))
        result.collections.push_back(restrict_to(all, members, CollectionKind::CSG));
    return result;
}

std::vector<CycleCollection> build_DSG(const CycleCollection& c) {
    std::vector<std::size_t> alive(c.cycles.size());
    std::iota(alive.begin(), alive.end(), std::size_t{0});
    while (true) {
        CycleCollection current = restrict_to(c, alive, CollectionKind::DSG);
        std::optional<std::size_t> drop;
        // Members stay in lexicographic order, so the first hit is the smallest cycle.
        for (std::size_t k = 0; k < current.cycles.size() && !drop; ++k)
            if (exclusive_vertices(current, k).empty()) drop = k;
        if (!drop) break;
        alive.erase(alive.begin() + static_cast<long>(*drop));
    }

    const CycleCollection kept = restrict_to(c, alive, CollectionKind::DSG);
    std::vector<CycleCollection> out;
    for (const auto& members : link_components(kept.cycles.size(), link_adjacency(kept)))
        out.push_back(restrict_to(kept, members, CollectionKind::DSG));
    return out;
}

X3Assignments enumerate_x3_assignments(const CycleCollection& c, std::size_t limit, const Deadline& deadline) {
    X3Assignments out;
    if (c.cycles.empty()) return out;
    for (const Cycle& cyc : c.cycles)
        if (cyc.length() % 3 != 0) throw std::invalid_argument("collection holds a cycle whose length is not divisible by 3");

    // Visit cycles along the link graph so each choice is constrained by its predecessors.
    const auto adj = link_adjacency(c);
    std::vector<std::size_t> order;
    std::vector<char> queued(c.cycles.size(), 0);
    for (std::size_t s = 0; s < c.cycles.size(); ++s) {
        if (queued[s]) continue;
        std::queue<std::size_t> q;
        q.push(s);
        queued[s] = 1;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            order.push_back(u);
            for (std::size_t w : adj[u])
                if (!queued[w]) {
                    queued[w] = 1;
                    q.push(w);
                }
        }
    }

    std::map<Vertex, int> state;  // 1 in x, 0 out
    for (Vertex v : c.vertex_union) state[v] = -1;
    bool stop = false;

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (stop) return;
        deadline.poll();
        if (depth == order.size()) {
            if (out.sets.size() == limit) {
                out.truncated = true;
                stop = true;
                return;
            }
            VertexSet x;
            for (const auto& [v, s] : state)
                if (s == 1) x.push_back(v);
            out.sets.push_back(std::move(x));
            return;
        }
        const Cycle& cyc = c.cycles[order[depth]];
        for (std::size_t r = 0; r < 3 && !stop; ++r) {
            std::vector<Vertex> touched;
            bool ok = true;
            for (std::size_t i = 0; i < cyc.length() && ok; ++i) {
                const int want = i % 3 == r ? 1 : 0;
                int& s = state[cyc.vertices[i]];
                if (s == -1) {
                    s = want;
                    touched.push_back(cyc.vertices[i]);
                } else if (s != want) {
                    ok = false;
                }
            }
            if (ok) self(self, depth + 1);
            for (Vertex v : touched) state[v] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

std::optional<VertexSet> assign_x3(const CycleCollection& c) {
    auto all = enumerate_x3_assignments(c);
    if (all.sets.empty()) return std::nullopt;
    return all.sets.front();
}

}  // namespace domlab
