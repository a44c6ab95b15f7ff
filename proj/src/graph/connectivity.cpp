#include "domlab/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace domlab {

namespace {

// Unit-capacity residual network over split vertices: in(v) = 2v, out(v) = 2v + 1.
class SplitFlow {
public:
    struct Arc {
        int to;
        int cap;
        int rev;
        int flow = 0;
        bool forward = true;
    };

    explicit SplitFlow(int nodes) : arcs_(static_cast<std::size_t>(nodes)) {}

    void add_arc(int from, int to, int cap) {
        arcs_[static_cast<std::size_t>(from)].push_back({to, cap, static_cast<int>(arcs_[static_cast<std::size_t>(to)].size())});
        arcs_[static_cast<std::size_t>(to)].push_back(
            {from, 0, static_cast<int>(arcs_[static_cast<std::size_t>(from)].size()) - 1, 0, false});
    }

    // Edmonds-Karp; BFS visits arcs in insertion order, so results are deterministic.
    int max_flow(int s, int t, int limit) {
        int flow = 0;
        const auto nodes = arcs_.size();
        while (flow < limit) {
            std::vector<std::pair<int, int>> parent(nodes, {-1, -1});
            std::queue<int> q;
            q.push(s);
            parent[static_cast<std::size_t>(s)] = {s, -1};
            while (!q.empty() && parent[static_cast<std::size_t>(t)].first < 0) {
                int u = q.front();
                q.pop();
                const auto& out = arcs_[static_cast<std::size_t>(u)];
                for (int i = 0; i < static_cast<int>(out.size()); ++i) {
                    const Arc& a = out[static_cast<std::size_t>(i)];
                    if (a.cap > 0 && parent[static_cast<std::size_t>(a.to)].first < 0) {
                        parent[static_cast<std::size_t>(a.to)] = {u, i};
                        q.push(a.to);
                    }
                }
            }
            if (parent[static_cast<std::size_t>(t)].first < 0) break;
            for (int v = t; v != s;) {
                auto [u, i] = parent[static_cast<std::size_t>(v)];
                Arc& a = arcs_[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
                Arc& back = arcs_[static_cast<std::size_t>(v)][static_cast<std::size_t>(a.rev)];
                a.cap -= 1;
                back.cap += 1;
                if (a.forward)
                    a.flow += 1;
                else
                    back.flow -= 1;
                v = u;
            }
            ++flow;
        }
        return flow;
    }

    std::vector<Arc>& arcs(int node) { return arcs_[static_cast<std::size_t>(node)]; }

private:
    std::vector<std::vector<Arc>> arcs_;
};

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }

}  // namespace

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<VertexSet> components(const Graph& g) {
    return components_within(g, all_vertices(g));
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& allowed) {
    check_members(g, allowed);
    std::vector<char> ok(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : allowed) ok[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<VertexSet> out;
    for (Vertex start : allowed) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (ok[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        out.push_back(make_vertex_set(std::move(comp)));
    }
    return out;
}

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t) {
    if (s == t || g.has_edge(s, t)) throw std::invalid_argument("local connectivity needs distinct non-adjacent vertices");
    const int n = g.order();
    SplitFlow net(2 * n);
    for (Vertex v = 0; v < n; ++v) net.add_arc(in_node(v), out_node(v), (v == s || v == t) ? kInf : 1);
    for (const Edge& e : g.edges()) {
        net.add_arc(out_node(e.u), in_node(e.v), 1);
        net.add_arc(out_node(e.v), in_node(e.u), 1);
    }
    return net.max_flow(out_node(s), in_node(t), n);
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("vertex connectivity needs n >= 1");
    int best = n - 1;
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            best = std::min(best, local_vertex_connectivity(g, s, t));
            if (best == 0) return 0;
        }
    }
    return best;
}

std::vector<std::vector<Vertex>> disjoint_paths_to_set(const Graph& g, Vertex source, const VertexSet& sinks, int want,
                                                      const std::optional<VertexSet>& allowed) {
    check_members(g, sinks);
    if (!g.contains(source)) throw std::out_of_range("source out of range");
    const int n = g.order();
    std::vector<char> usable(static_cast<std::size_t>(n), allowed ? 0 : 1);
    if (allowed)
        for (Vertex v : *allowed) usable[static_cast<std::size_t>(v)] = 1;
    usable[static_cast<std::size_t>(source)] = 1;
    for (Vertex v : sinks) usable[static_cast<std::size_t>(v)] = 1;

    const int super_sink = 2 * n;
    SplitFlow net(2 * n + 1);
    for (Vertex v = 0; v < n; ++v)
        if (usable[static_cast<std::size_t>(v)]) net.add_arc(in_node(v), out_node(v), v == source ? kInf : 1);
    for (const Edge& e : g.edges()) {
        if (!usable[static_cast<std::size_t>(e.u)] || !usable[static_cast<std::size_t>(e.v)]) continue;
        // Sinks terminate paths; the source is never re-entered.
        if (!contains(sinks, e.u) && e.v != source) net.add_arc(out_node(e.u), in_node(e.v), 1);
        if (!contains(sinks, e.v) && e.u != source) net.add_arc(out_node(e.v), in_node(e.u), 1);
    }
    for (Vertex t : sinks)
        if (t != source) net.add_arc(out_node(t), super_sink, 1);

    const int flow = net.max_flow(out_node(source), super_sink, want);
    // Each vertex carries at most one unit, so following positive flow from
    // the source never enters a circulation.
    std::vector<std::vector<Vertex>> paths;
    for (int k = 0; k < flow; ++k) {
        std::vector<Vertex> path{source};
        int node = out_node(source);
        while (true) {
            auto& arcs = net.arcs(node);
            auto it = std::find_if(arcs.begin(), arcs.end(), [](const SplitFlow::Arc& a) { return a.forward && a.flow > 0; });
            if (it == arcs.end()) throw std::logic_error("flow decomposition lost a unit");
            it->flow -= 1;
            if (it->to == super_sink) break;
            const Vertex v = it->to / 2;
            path.push_back(v);
            node = out_node(v);
            auto& inner = net.arcs(in_node(v));
            for (auto& a : inner)
                if (a.forward && a.to == node && a.flow > 0) a.flow -= 1;
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

bool is_cubic(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

}  // namespace domlab
