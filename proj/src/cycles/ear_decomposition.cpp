#include "domlab/ear_decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "domlab/connectivity.hpp"

namespace domlab {

namespace {

// BFS from `start` that may not use `avoid_edge` and may only pass through
// vertices where `passable` is set; stops at the first vertex accepted by `is_goal`.
template <class Passable, class Goal>
Path bfs_path(const Graph& g, Vertex start, Edge avoid_edge, Passable passable, Goal is_goal) {
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> q;
    q.push(start);
    parent[static_cast<std::size_t>(start)] = start;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (parent[static_cast<std::size_t>(w)] >= 0 || Edge(u, w) == avoid_edge) continue;
            if (is_goal(w)) {
                Path p{w};
                for (Vertex x = u; x != start; x = parent[static_cast<std::size_t>(x)]) p.push_back(x);
                p.push_back(start);
                std::reverse(p.begin(), p.end());
                return p;
            }
            if (!passable(w)) continue;
            parent[static_cast<std::size_t>(w)] = u;
            q.push(w);
        }
    }
    return {};
}

}  // namespace

EarDecomposition ear_decomposition(const Graph& g) {
    if (g.order() < 3 || vertex_connectivity(g) < 2) throw std::invalid_argument("ear decomposition needs a 2-connected graph");

    const Vertex first = 0;
    const Vertex second = g.neighbors(first).front();
    Path around = bfs_path(
        g, second, Edge(first, second), [&](Vertex w) { return w != first; }, [&](Vertex w) { return w == first; });

    EarDecomposition d;
    d.initial = canonical_cycle(around);

    std::vector<char> built(static_cast<std::size_t>(g.order()), 0);
    std::set<Edge> used;
    for (Vertex v : around) built[static_cast<std::size_t>(v)] = 1;
    for (const Edge& e : cycle_edges(Cycle{around})) used.insert(e);

    while (used.size() < g.size()) {
        Edge next{};
        bool found = false;
        for (const Edge& e : g.edges()) {
            if (used.count(e)) continue;
            if (built[static_cast<std::size_t>(e.u)] || built[static_cast<std::size_t>(e.v)]) {
                next = e;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("ear decomposition stalled");

        const Vertex start = built[static_cast<std::size_t>(next.u)] ? next.u : next.v;
        const Vertex step = start == next.u ? next.v : next.u;
        Path ear;
        if (built[static_cast<std::size_t>(step)]) {
            ear = {start, step};
        } else {
            Path tail = bfs_path(
                g, step, Edge(start, step), [&](Vertex w) { return !built[static_cast<std::size_t>(w)]; },
                [&](Vertex w) { return built[static_cast<std::size_t>(w)] && w != start; });
            if (tail.empty()) throw std::logic_error("no ear closes; graph is not 2-connected");
            ear.push_back(start);
            ear.insert(ear.end(), tail.begin(), tail.end());
        }
        for (std::size_t i = 0; i + 1 < ear.size(); ++i) used.insert(Edge(ear[i], ear[i + 1]));
        for (Vertex v : ear) built[static_cast<std::size_t>(v)] = 1;
        d.ears.push_back(std::move(ear));
    }
    return d;
}

Graph reassemble(const EarDecomposition& d, int order) {
    std::vector<Edge> edges = cycle_edges(d.initial);
    for (const Path& ear : d.ears)
        for (std::size_t i = 0; i + 1 < ear.size(); ++i) edges.emplace_back(ear[i], ear[i + 1]);
    std::sort(edges.begin(), edges.end());
    return Graph::from_edges(order, edges);
}

}  // namespace domlab
