#include "domlab/cycles.hpp"

#include <algorithm>

#include "domlab/connectivity.hpp"

namespace domlab {

Cycle canonical_cycle(std::vector<Vertex> cyclic) {
    if (cyclic.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    auto smallest = std::min_element(cyclic.begin(), cyclic.end());
    std::rotate(cyclic.begin(), smallest, cyclic.end());
    if (cyclic.back() < cyclic[1]) std::reverse(cyclic.begin() + 1, cyclic.end());
    return Cycle{std::move(cyclic)};
}

bool is_valid_cycle(const Graph& g, const Cycle& c) {
    const auto& vs = c.vertices;
    if (vs.size() < 3) return false;
    VertexSet distinct = make_vertex_set(vs);
    if (distinct.size() != vs.size()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
    return canonical_cycle(vs) == c;
}

EdgeSet cycle_edges(const Cycle& c) {
    std::vector<Edge> out;
    const auto& vs = c.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) out.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
    return make_edge_set(std::move(out));
}

namespace {

// Cycles are rooted at their smallest vertex s; the walk only visits ids > s
// and records a closure when the second vertex is below the last, so each
// cycle appears once, already canonical. Preorder over ascending neighbors
// yields lexicographic order.
class CycleWalker {
public:
    CycleWalker(const Graph& g, std::size_t limit, bool mod3, const Deadline& deadline, std::size_t exact_length = 0)
        : g_(g),
          limit_(limit),
          mod3_(mod3),
          exact_length_(exact_length),
          deadline_(deadline),
          on_path_(static_cast<std::size_t>(g.order()), 0) {}

    CycleEnumeration run() {
        for (Vertex s = 0; s < g_.order() && !done_; ++s) {
            root_ = s;
            path_ = {s};
            on_path_[static_cast<std::size_t>(s)] = 1;
            extend();
            on_path_[static_cast<std::size_t>(s)] = 0;
        }
        return std::move(out_);
    }

private:
    void extend() {
        deadline_.poll();
        const Vertex last = path_.back();
        for (Vertex w : g_.neighbors(last)) {
            if (done_) return;
            if (w == root_) {
                if (path_.size() >= 3 && path_[1] < last && (!mod3_ || path_.size() % 3 == 0) &&
                    (exact_length_ == 0 || path_.size() == exact_length_))
                    record();
                continue;
            }
            if (w < root_ || on_path_[static_cast<std::size_t>(w)]) continue;
            if (exact_length_ != 0 && path_.size() == exact_length_) continue;
            path_.push_back(w);
            on_path_[static_cast<std::size_t>(w)] = 1;
            extend();
            on_path_[static_cast<std::size_t>(w)] = 0;
            path_.pop_back();
        }
    }

    void record() {
        if (out_.cycles.size() == limit_) {
            out_.truncated = true;
            done_ = true;
            return;
        }
        out_.cycles.push_back(Cycle{path_});
    }

    const Graph& g_;
    std::size_t limit_;
    bool mod3_;
    std::size_t exact_length_;
    const Deadline& deadline_;
    std::vector<char> on_path_;
    std::vector<Vertex> path_;
    Vertex root_ = 0;
    bool done_ = false;
    CycleEnumeration out_;
};

}  // namespace

CycleEnumeration enumerate_mod3_cycles(const Graph& g, std::size_t limit, const Deadline& deadline) {
    return CycleWalker(g, limit, true, deadline).run();
}

CycleEnumeration enumerate_cycles(const Graph& g, std::size_t limit, const Deadline& deadline) {
    return CycleWalker(g, limit, false, deadline).run();
}

std::optional<Cycle> find_mod3_cycle(const Graph& g, const Deadline& deadline) {
    for (std::size_t len = 3; len <= static_cast<std::size_t>(g.order()); len += 3) {
        auto e = CycleWalker(g, 1, true, deadline, len).run();
        if (!e.cycles.empty()) return e.cycles.front();
    }
    return std::nullopt;
}

PathSearch find_path_mod_r(const Graph& g, Vertex u, Vertex v, int r, std::int64_t budget,
                           const std::optional<VertexSet>& interior) {
    if (budget <= 0) throw std::invalid_argument("path search budget must be positive");
    if (!g.contains(u) || !g.contains(v)) throw std::out_of_range("path endpoint out of range");
    if (u == v) throw std::invalid_argument("path endpoints must differ");
    if (r < 0 || r > 2) throw std::invalid_argument("residue must be 0, 1 or 2");

    std::vector<char> usable(static_cast<std::size_t>(g.order()), interior ? 0 : 1);
    if (interior)
        for (Vertex w : *interior) usable[static_cast<std::size_t>(w)] = 1;
    std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
    Path path{u};
    on_path[static_cast<std::size_t>(u)] = 1;
    std::int64_t expansions = 0;
    bool exhausted = false;

    auto dfs = [&](auto&& self) -> bool {
        if (++expansions > budget) {
            exhausted = true;
            return false;
        }
        for (Vertex w : g.neighbors(path.back())) {
            if (w == v) {
                const std::size_t len = path.size();
                if (static_cast<int>(len % 3) == r && (!interior || len >= 2)) {
                    path.push_back(v);
                    return true;
                }
                continue;
            }
            if (on_path[static_cast<std::size_t>(w)] || !usable[static_cast<std::size_t>(w)]) continue;
            path.push_back(w);
            on_path[static_cast<std::size_t>(w)] = 1;
            if (self(self)) return true;
            on_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
            if (exhausted) return false;
        }
        return false;
    };

    if (dfs(dfs)) return {SearchStatus::found, path};
    return {exhausted ? SearchStatus::budget_exhausted : SearchStatus::absent, std::nullopt};
}

std::optional<std::pair<Path, Path>> find_fan_paths(const Graph& g, Vertex t0, Vertex u0, Vertex v0) {
    if (t0 == u0 || t0 == v0 || u0 == v0) throw std::invalid_argument("fan endpoints must be distinct");
    auto paths = disjoint_paths_to_set(g, t0, make_vertex_set({u0, v0}), 2);
    if (paths.size() < 2) return std::nullopt;
    if (paths[0].back() != u0) std::swap(paths[0], paths[1]);
    return std::make_pair(std::move(paths[0]), std::move(paths[1]));
}

bool is_x3_path(const Path& p, const VertexSet& x) {
    for (std::size_t r = 0; r < 3; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i) ok = contains(x, p[i]) == (i % 3 == r);
        if (ok) return true;
    }
    return false;
}

bool check_x3_assignment(const Cycle& c, const VertexSet& x) {
    if (c.length() % 3 != 0) throw std::invalid_argument("x3 assignment needs a cycle length divisible by 3");
    for (std::size_t r = 0; r < 3; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < c.length() && ok; ++i) ok = contains(x, c.vertices[i]) == (i % 3 == r);
        if (ok) return true;
    }
    return false;
}

}  // namespace domlab
