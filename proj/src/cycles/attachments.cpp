#include "domlab/attachments.hpp"

#include <algorithm>

#include "domlab/connectivity.hpp"

namespace domlab {

std::optional<SeamRow> seam_row_for(AttachmentType t1, AttachmentType t2, std::size_t length) {
    if (t2 < t1) std::swap(t1, t2);
    const int residue = static_cast<int>(length % 3);
    for (const SeamRow& row : kSeamTable)
        if (row.first == t1 && row.second == t2 && row.residue == residue) return row;
    return std::nullopt;
}

VertexSet compute_R_prime(const Graph& g, const VertexSet& vertex_union) {
    VertexSet out;
    for (Vertex r = 0; r < g.order(); ++r) {
        if (contains(vertex_union, r)) continue;
        const auto& nb = g.neighbors(r);
        auto off_union = std::count_if(nb.begin(), nb.end(), [&](Vertex w) { return !contains(vertex_union, w); });
        if (off_union <= 1) out.push_back(r);
    }
    return out;
}

AttachmentType attachment_type(const Graph& g, const VertexSet& vertex_union, const VertexSet& x,
                               const VertexSet& r_prime, Vertex o) {
    if (contains(vertex_union, o)) return contains(x, o) ? AttachmentType::a : AttachmentType::d;
    if (!contains(r_prime, o)) throw std::invalid_argument("vertex " + std::to_string(o) + " is not in O");
    const auto& nb = g.neighbors(o);
    const bool x_neighbor = std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return contains(vertex_union, w) && contains(x, w); });
    return x_neighbor ? AttachmentType::c : AttachmentType::b;
}

namespace {

void require_assignment(const CycleCollection& c, const VertexSet& x) {
    for (const Cycle& cyc : c.cycles)
        if (!check_x3_assignment(cyc, x)) throw std::invalid_argument("x is not a valid X-3 assignment for the collection");
}

std::vector<std::pair<Vertex, AttachmentType>> typed_attachments(const Graph& g, const VertexSet& vertex_union,
                                                                  const VertexSet& x, const VertexSet& r_prime,
                                                                  const VertexSet& m) {
    const VertexSet outer = set_difference(g.open_neighborhood(m), m);
    std::vector<std::pair<Vertex, AttachmentType>> out;
    for (Vertex o : outer) out.emplace_back(o, attachment_type(g, vertex_union, x, r_prime, o));
    return out;
}

SeamSearch search_extension(const Graph& g, const std::vector<std::pair<Vertex, AttachmentType>>& attachments,
                            const VertexSet& m, std::int64_t path_budget) {
    SeamSearch result;
    for (std::size_t i = 0; i < attachments.size(); ++i)
        for (std::size_t j = i + 1; j < attachments.size(); ++j) {
            auto [o1, t1] = attachments[i];
            auto [o2, t2] = attachments[j];
            auto lo = std::min(t1, t2), hi = std::max(t1, t2);
            for (const SeamRow& row : kSeamTable) {
                if (row.first != lo || row.second != hi) continue;
                PathSearch s = find_path_mod_r(g, o1, o2, row.residue, path_budget, m);
                if (s.status == SearchStatus::found) {
                    result.extension = SeamExtension{std::move(*s.path), row.row};
                    return result;
                }
                if (s.status == SearchStatus::budget_exhausted) result.incomplete = true;
            }
        }
    return result;
}

}  // namespace

std::vector<AttachmentReport> classify_attachments(const Graph& g, const CycleCollection& c, const VertexSet& x,
                                                   const VertexSet& r_prime, std::int64_t path_budget) {
    require_assignment(c, x);
    check_members(g, r_prime);
    const VertexSet outside = set_difference(set_difference(all_vertices(g), c.vertex_union), r_prime);
    std::vector<AttachmentReport> out;
    for (const VertexSet& m : components_within(g, outside)) {
        AttachmentReport report;
        report.component_vertices = m;
        report.attachments = typed_attachments(g, c.vertex_union, x, r_prime, m);
        SeamSearch s = search_extension(g, report.attachments, m, path_budget);
        report.extension = std::move(s.extension);
        report.search_incomplete = s.incomplete;
        out.push_back(std::move(report));
    }
    return out;
}

SeamSearch detect_seam_extension(const Graph& g, const CycleCollection& c, const VertexSet& x, const VertexSet& m,
                                 std::int64_t path_budget) {
    require_assignment(c, x);
    const VertexSet r_prime = compute_R_prime(g, c.vertex_union);
    const VertexSet outside = set_difference(set_difference(all_vertices(g), c.vertex_union), r_prime);
    const auto comps = components_within(g, outside);
    if (std::find(comps.begin(), comps.end(), m) == comps.end())
        throw std::invalid_argument("m is not a component of G - O");
    return search_extension(g, typed_attachments(g, c.vertex_union, x, r_prime, m), m, path_budget);
}

}  // namespace domlab
