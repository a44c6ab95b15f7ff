#include "domlab/cycle_audits.hpp"

#include <algorithm>
#include <set>

#include "domlab/connectivity.hpp"
#include "domlab/cycles.hpp"
#include "domlab/domination.hpp"

namespace domlab {

namespace {

void require_three_connected(const Graph& g) {
    if (g.order() < 1 || vertex_connectivity(g) < 3) throw std::invalid_argument("audit needs a 3-connected graph");
}

void require_assignment(const CycleCollection& c, const VertexSet& x) {
    for (const Cycle& cyc : c.cycles)
        if (!check_x3_assignment(cyc, x)) throw std::invalid_argument("not a valid X-3 assignment for the collection");
}

}  // namespace

AuditVerdict audit_claim_nonempty(const Graph& g, const Deadline& deadline) {
    require_three_connected(g);
    if (auto c = find_mod3_cycle(g, deadline)) return AuditVerdict::pass({{"cycle", c->vertices}});
    return AuditVerdict::fail({{"reason", "no cycle of length 0 mod 3"}});
}

AuditVerdict audit_claim_two_y3paths(const Graph& g, const CycleCollection& c, const VertexSet& y,
                                     std::int64_t path_budget) {
    require_assignment(c, y);
    const Graph host = Graph::from_edges(g.order(), collection_edges(c));
    const auto& vs = c.vertex_union;
    std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);

    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const Vertex p = vs[i], q = vs[j];
            // (second vertex, penultimate vertex) of every qualifying path.
            std::set<std::pair<Vertex, Vertex>> ends;
            Path path{p};
            on_path[static_cast<std::size_t>(p)] = 1;
            std::int64_t expansions = 0;
            bool exhausted = false, satisfied = false;

            auto accept = [&](const Path& full) {
                const std::pair<Vertex, Vertex> key{full[1], full[full.size() - 2]};
                for (const auto& [second, penult] : ends)
                    if (second != key.first && penult != key.second) satisfied = true;
                ends.insert(key);
            };
            auto dfs = [&](auto&& self) -> void {
                if (satisfied || exhausted) return;
                if (++expansions > path_budget) {
                    exhausted = true;
                    return;
                }
                for (Vertex w : host.neighbors(path.back())) {
                    if (on_path[static_cast<std::size_t>(w)]) continue;
                    path.push_back(w);
                    if (w == q) {
                        if (is_x3_path(path, y)) accept(path);
                    } else {
                        on_path[static_cast<std::size_t>(w)] = 1;
                        self(self);
                        on_path[static_cast<std::size_t>(w)] = 0;
                    }
                    path.pop_back();
                    if (satisfied || exhausted) return;
                }
            };
            dfs(dfs);
            on_path[static_cast<std::size_t>(p)] = 0;
            if (satisfied) continue;
            if (exhausted) {
                AuditVerdict v = AuditVerdict::timeout();
                v.witness = nlohmann::json{{"reason", "budget"}, {"pair", {p, q}}};
                return v;
            }
            return AuditVerdict::fail({{"pair", {p, q}}, {"qualifying_paths", ends.size()}});
        }
    return AuditVerdict::pass({{"pairs", vs.size() * (vs.size() - 1) / 2}});
}

AuditVerdict audit_claim_R1(const Graph& g, const CycleCollection& c, const VertexSet& x) {
    require_three_connected(g);
    require_assignment(c, x);
    const VertexSet rest = set_difference(all_vertices(g), c.vertex_union);
    for (const VertexSet& comp : components_within(g, rest)) {
        if (comp.size() > 1) return AuditVerdict::fail({{"component", comp}});
        const Vertex r = comp.front();
        for (Vertex w : g.neighbors(r))
            if (!contains(x, w)) return AuditVerdict::fail({{"singleton", r}, {"neighbor_outside_x", w}});
    }
    return AuditVerdict::pass({{"leftover", rest.size()}});
}

VertexSet complete_to_dominating(const Graph& g, const VertexSet& x) {
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    auto cover = [&](Vertex v) {
        covered[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v)) covered[static_cast<std::size_t>(w)] = 1;
    };
    for (Vertex v : x) cover(v);
    VertexSet out = x;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (covered[static_cast<std::size_t>(v)]) continue;
        out.push_back(v);
        cover(v);
    }
    return make_vertex_set(std::move(out));
}

AuditVerdict dset_pipeline(const Graph& g, const DsetPipelineOptions& options) {
    const auto gamma = gamma_exact(g, options.deadline).size;
    const CsgResult csg = build_CSG(g, {options.cycle_limit, options.deadline});

    std::optional<VertexSet> best;
    std::size_t dsg_count = 0, candidates = 0;
    bool assignments_truncated = false;
    for (const CycleCollection& family : csg.collections) {
        for (const CycleCollection& dsg : build_DSG(family)) {
            ++dsg_count;
            X3Assignments xs = enumerate_x3_assignments(dsg, options.assignment_limit, options.deadline);
            assignments_truncated = assignments_truncated || xs.truncated;
            for (const VertexSet& x : xs.sets) {
                ++candidates;
                VertexSet cand = complete_to_dominating(g, x);
                if (!best || cand.size() < best->size() || (cand.size() == best->size() && cand < *best)) best = cand;
            }
        }
    }

    nlohmann::json detail{{"gamma", gamma},
                          {"csg_collections", csg.collections.size()},
                          {"dsg_collections", dsg_count},
                          {"candidates", candidates},
                          {"cycles_truncated", csg.truncated},
                          {"assignments_truncated", assignments_truncated}};
    if (!best) return AuditVerdict::fail({{"reason", "no X-3 assignment"}}, detail);
    detail["candidate_size"] = best->size();
    detail["candidate"] = *best;
    if (best->size() == gamma) return AuditVerdict::pass(detail);
    return AuditVerdict::fail({{"candidate_size", best->size()}, {"gamma", gamma}}, detail);
}

AuditVerdict dset_from_DSG(const Graph& g, const DsetPipelineOptions& options) {
    require_three_connected(g);
    return dset_pipeline(g, options);
}

}  // namespace domlab
