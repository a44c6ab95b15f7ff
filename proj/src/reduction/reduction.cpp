#include "domlab/reduction.hpp"

#include <algorithm>
#include <set>

#include "domlab/connectivity.hpp"
#include "domlab/domination.hpp"

namespace domlab {

std::optional<Claw> find_induced_claw(const Graph& g) {
    for (Vertex c = 0; c < g.order(); ++c) {
        const auto& nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return Claw{c, nb[i], nb[j], nb[k]};
            }
    }
    return std::nullopt;
}

std::optional<ForbiddenI> find_forbidden_I(const Graph& g) {
    for (const Edge& e : g.edges()) {
        if (g.degree(e.u) >= 3 && g.degree(e.v) >= 3)
            return ForbiddenI{e.u, e.v, g.closed_neighborhood(VertexSet{e.u, e.v})};
    }
    return std::nullopt;
}

namespace {

// x contains `inside`, not `outside`, and `outside` has an x-neighbor besides `inside`.
bool half_covered(const Graph& g, const VertexSet& x, Vertex inside, Vertex outside) {
    if (!contains(x, inside) || contains(x, outside)) return false;
    const auto& nb = g.neighbors(outside);
    return std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return w != inside && contains(x, w); });
}

}  // namespace

EdgeSet compute_U(const Graph& g, const VertexSet& x) {
    check_members(g, x);
    EdgeSet out;
    for (const Edge& e : g.edges()) {
        const bool in_u = contains(x, e.u), in_v = contains(x, e.v);
        if (in_u == in_v || half_covered(g, x, e.u, e.v) || half_covered(g, x, e.v, e.u)) out.push_back(e);
    }
    return out;
}

AuditVerdict check_fact_U(const Graph& g, const VertexSet& x, const EdgeSet& u_prime) {
    const EdgeSet u = compute_U(g, x);
    for (const Edge& e : u_prime)
        if (!contains(u, e))
            throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in U(X)");
    const Graph reduced = delete_edges(g, u_prime);
    const VertexSet covered = reduced.closed_neighborhood(x);
    for (Vertex v = 0; v < g.order(); ++v)
        if (!contains(covered, v)) return AuditVerdict::fail({{"undominated", v}, {"removed", u_prime.size()}});
    return AuditVerdict::pass({{"removed", u_prime.size()}});
}

EdgeSet safe_U_subset(const Graph& g, const VertexSet& x) {
    std::vector<int> x_neighbors(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v))
            if (contains(x, w)) ++x_neighbors[static_cast<std::size_t>(v)];

    EdgeSet out;
    for (const Edge& e : compute_U(g, x)) {
        const bool in_u = contains(x, e.u), in_v = contains(x, e.v);
        if (in_u != in_v) {
            const Vertex outside = in_u ? e.v : e.u;
            auto& count = x_neighbors[static_cast<std::size_t>(outside)];
            if (count < 2) continue;
            --count;
        }
        out.push_back(e);
    }
    return out;
}

VertexSet compute_T(const Graph& g, const VertexSet& y) {
    check_members(g, y);
    std::vector<Vertex> out;
    for (Vertex t : y) {
        for (Vertex b : g.neighbors(t)) {
            if (contains(y, b)) continue;
            const auto& nb = g.neighbors(b);
            if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return w != t && contains(y, w); })) out.push_back(b);
        }
    }
    return make_vertex_set(std::move(out));
}

STransformResult apply_S_transform(const Graph& g, const VertexSet& y, const VertexSet& s) {
    const VertexSet t = compute_T(g, y);
    for (Vertex v : s)
        if (!contains(t, v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not in T(Y)");

    std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)].insert(g.neighbors(v).begin(), g.neighbors(v).end());

    STransformResult result;
    for (Vertex v1 : s) {
        const auto& nb = g.neighbors(v1);
        const Vertex t1 = *std::find_if(nb.begin(), nb.end(), [&](Vertex w) { return contains(y, w); });
        adj[static_cast<std::size_t>(v1)].erase(t1);
        adj[static_cast<std::size_t>(t1)].erase(v1);
        result.deleted_edges.emplace_back(v1, t1);

        const std::vector<Vertex> others(adj[static_cast<std::size_t>(v1)].begin(), adj[static_cast<std::size_t>(v1)].end());
        for (Vertex t2 : others) {
            const auto w = static_cast<Vertex>(adj.size());
            adj.emplace_back();
            adj[static_cast<std::size_t>(v1)].erase(t2);
            adj[static_cast<std::size_t>(t2)].erase(v1);
            adj[static_cast<std::size_t>(v1)].insert(w);
            adj[static_cast<std::size_t>(t2)].insert(w);
            adj[static_cast<std::size_t>(w)] = {v1, t2};
            result.new_vertices[{v1, t2}] = w;
        }
    }

    std::vector<Edge> edges;
    for (Vertex u = 0; u < static_cast<Vertex>(adj.size()); ++u)
        for (Vertex v : adj[static_cast<std::size_t>(u)])
            if (u < v) edges.emplace_back(u, v);
    result.graph = Graph::from_edges(static_cast<int>(adj.size()), edges);
    result.deleted_edges = make_edge_set(std::move(result.deleted_edges));
    return result;
}

AuditVerdict check_fact_T(const Graph& g, const VertexSet& y, const VertexSet& t_prime) {
    const VertexSet t = compute_T(g, y);
    for (Vertex v : t_prime)
        if (!contains(t, v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not in T(Y)");

    const InducedGraph rest = delete_vertices(g, t_prime);
    VertexSet y_rest;
    for (std::size_t i = 0; i < rest.original.size(); ++i)
        if (contains(y, rest.original[i])) y_rest.push_back(static_cast<Vertex>(i));
    if (!is_dominating(rest.graph, y_rest)) return AuditVerdict::vacuous_pass();

    const STransformResult transformed = apply_S_transform(g, y, t_prime);
    const VertexSet candidate = set_union(y, t_prime);
    const VertexSet covered = transformed.graph.closed_neighborhood(candidate);
    for (Vertex v = 0; v < transformed.graph.order(); ++v)
        if (!contains(covered, v))
            return AuditVerdict::fail({{"undominated", v}, {"t_prime", t_prime}, {"y", y}});
    return AuditVerdict::pass({{"transformed_order", transformed.graph.order()}});
}

AuditVerdict check_lemma_disjoint(const Graph& g, const VertexSet& x) {
    if (g.max_degree() > 3) throw std::invalid_argument("disjointness lemma needs max degree <= 3");
    check_members(g, x);
    if (x.size() < 3 || induced_edge_count(g, x) == 0) return AuditVerdict::vacuous_pass();
    for (Vertex v1 : x)
        for (Vertex v2 : g.neighbors(v1)) {
            if (v2 <= v1 || !contains(x, v2)) continue;
            const VertexSet pair_nbhd = g.closed_neighborhood(VertexSet{v1, v2});
            for (Vertex w : x) {
                if (w == v1 || w == v2) continue;
                const VertexSet common = set_intersection(pair_nbhd, g.closed_neighborhood(w));
                if (!common.empty())
                    return AuditVerdict::fail({{"v1", v1}, {"v2", v2}, {"w", w}, {"common", common.front()}, {"x", x}});
            }
        }
    return AuditVerdict::pass();
}

namespace {

void require_connected_cubic(const Graph& g) {
    if (!is_cubic(g) || !is_connected(g)) throw std::invalid_argument("check needs a connected cubic graph");
}

}  // namespace

AuditVerdict check_theorem_T1(const Graph& g, const Deadline& deadline) {
    require_connected_cubic(g);
    const int bound = reed_bound(g.order());
    const auto gamma = static_cast<int>(gamma_exact(g, deadline).size);
    if (gamma <= bound) return AuditVerdict::vacuous_pass({{"gamma", gamma}, {"bound", bound}});
    const auto idom = static_cast<int>(idom_exact(g, deadline).size);
    nlohmann::json detail{{"gamma", gamma}, {"idom", idom}, {"bound", bound}};
    if (gamma == idom) return AuditVerdict::pass(detail);
    return AuditVerdict::fail(detail, detail);
}

AuditVerdict check_reed_bound(const Graph& g, const Deadline& deadline) {
    require_connected_cubic(g);
    const int bound = reed_bound(g.order());
    const auto cert = gamma_exact(g, deadline);
    nlohmann::json detail{{"gamma", cert.size}, {"bound", bound}};
    if (static_cast<int>(cert.size) <= bound) return AuditVerdict::pass(detail);
    return AuditVerdict::fail({{"gamma", cert.size}, {"bound", bound}, {"set", cert.set}}, detail);
}

namespace {

AuditVerdict gamma_equals_idom(const Graph& g, const Deadline& deadline) {
    const auto gamma = gamma_exact(g, deadline).size;
    const auto idom = idom_exact(g, deadline).size;
    nlohmann::json detail{{"gamma", gamma}, {"idom", idom}};
    if (gamma == idom) return AuditVerdict::pass(detail);
    return AuditVerdict::fail(detail, detail);
}

}  // namespace

AuditVerdict audit_claw_free(const Graph& g, const Deadline& deadline) {
    if (auto claw = find_induced_claw(g)) return AuditVerdict::vacuous_pass({{"claw", *claw}});
    return gamma_equals_idom(g, deadline);
}

AuditVerdict audit_no_forbidden_I(const Graph& g, const Deadline& deadline) {
    if (auto core = find_forbidden_I(g)) return AuditVerdict::vacuous_pass({{"core", {core->v1, core->v2}}});
    return gamma_equals_idom(g, deadline);
}

}  // namespace domlab
