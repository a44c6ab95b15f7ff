#include "domlab/domination.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace domlab {

std::string to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::gamma: return "gamma";
        case CertificateKind::idom: return "idom";
        case CertificateKind::gamma_min_edges: return "gamma-min-edges";
    }
    return "unknown";
}

DominationCertificate make_certificate(const Graph& g, VertexSet set, CertificateKind kind) {
    DominationCertificate cert;
    cert.induced_edges = induced_edge_count(g, set);
    cert.independent = cert.induced_edges == 0;
    cert.size = set.size();
    cert.set = std::move(set);
    cert.kind = kind;
    return cert;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
    check_members(g, s);
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s) {
        covered[static_cast<std::size_t>(v)] = 1;
        for (Vertex u : g.neighbors(v)) covered[static_cast<std::size_t>(u)] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
    return is_independent(g, s) && is_dominating(g, s);
}

namespace {

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void guard_enumeration(const Graph& g) {
    if (g.order() > kEnumerationMaxOrder)
        throw CapacityError("exhaustive enumeration supports n <= " + std::to_string(kEnumerationMaxOrder) +
                            ", got " + std::to_string(g.order()));
}

// Visits k-subsets of 0..n-1 in lexicographic order; stops when fn returns false.
bool for_each_combination(int n, int k, const std::function<bool(Mask)>& fn, const Deadline& deadline) {
    std::function<bool(int, int, Mask)> rec = [&](int start, int left, Mask chosen) {
        if (left == 0) {
            deadline.poll();
            return fn(chosen);
        }
        for (int v = start; v <= n - left; ++v)
            if (!rec(v + 1, left - 1, chosen | (Mask{1} << v))) return false;
        return true;
    };
    return rec(0, k, 0);
}

Mask coverage(const std::vector<Mask>& closed, Mask set) {
    Mask cov = 0;
    for (Mask m = set; m; m &= m - 1) cov |= closed[static_cast<std::size_t>(std::countr_zero(m))];
    return cov;
}

// Branch and bound shared by gamma and idom. In idom mode a chosen vertex
// must be undominated, which keeps the chosen set independent and makes the
// final dominating set a maximal independent set.
class DominationSearch {
public:
    DominationSearch(const Graph& g, bool independent, const Deadline& deadline)
        : closed_(closed_masks(g)), all_(full_mask(g.order())), independent_(independent), deadline_(deadline) {
        for (Mask m : closed_) max_closed_ = std::max(max_closed_, std::popcount(m));
    }

    Mask solve() {
        best_ = greedy();
        best_size_ = std::popcount(best_);
        recurse(0, 0, 0, 0);
        return best_;
    }

private:
    Mask candidates(Vertex w, Mask dominated, Mask forbidden) const {
        Mask c = closed_[static_cast<std::size_t>(w)] & ~forbidden;
        if (independent_) c &= ~dominated;
        return c;
    }

    Mask greedy() const {
        Mask chosen = 0, dominated = 0;
        while (dominated != all_) {
            int best_gain = -1;
            Vertex pick = -1;
            for (Vertex v = 0; v < static_cast<Vertex>(closed_.size()); ++v) {
                if (independent_ && (dominated >> v & 1)) continue;
                int gain = std::popcount(closed_[static_cast<std::size_t>(v)] & ~dominated);
                if (gain > best_gain) {
                    best_gain = gain;
                    pick = v;
                }
            }
            chosen |= Mask{1} << pick;
            dominated |= closed_[static_cast<std::size_t>(pick)];
        }
        return chosen;
    }

    // Undominated vertices whose candidate sets are pairwise disjoint each
    // need their own dominator.
    int lower_bound(Mask dominated, Mask forbidden) const {
        Mask undominated = all_ & ~dominated;
        int packing = 0;
        Mask used = 0;
        for (Mask m = undominated; m; m &= m - 1) {
            Vertex w = std::countr_zero(m);
            Mask c = candidates(w, dominated, forbidden);
            if (c == 0) return 1 << 20;
            if ((c & used) == 0) {
                used |= c;
                ++packing;
            }
        }
        int by_volume = (std::popcount(undominated) + max_closed_ - 1) / max_closed_;
        return std::max(packing, by_volume);
    }

    void recurse(Mask chosen, Mask dominated, Mask forbidden, int count) {
        deadline_.poll();
        if (dominated == all_) {
            if (count < best_size_) {
                best_size_ = count;
                best_ = chosen;
            }
            return;
        }
        if (count + lower_bound(dominated, forbidden) >= best_size_) return;

        // Branch on the undominated vertex with the fewest admissible
        // dominators; ties go to the smaller degree, then the smaller id.
        Vertex pivot = -1;
        int pivot_options = 1 << 20, pivot_degree = 1 << 20;
        for (Mask m = all_ & ~dominated; m; m &= m - 1) {
            Vertex w = std::countr_zero(m);
            int options = std::popcount(candidates(w, dominated, forbidden));
            int degree = std::popcount(closed_[static_cast<std::size_t>(w)]);
            if (options < pivot_options || (options == pivot_options && degree < pivot_degree)) {
                pivot = w;
                pivot_options = options;
                pivot_degree = degree;
            }
        }

        Mask tried = 0;
        for (Mask m = candidates(pivot, dominated, forbidden); m; m &= m - 1) {
            Vertex u = std::countr_zero(m);
            Mask bit = Mask{1} << u;
            recurse(chosen | bit, dominated | closed_[static_cast<std::size_t>(u)], forbidden | tried, count + 1);
            tried |= bit;
        }
    }

    std::vector<Mask> closed_;
    Mask all_;
    bool independent_;
    const Deadline& deadline_;
    int max_closed_ = 1;
    Mask best_ = 0;
    int best_size_ = 0;
};

}  // namespace

DominationCertificate gamma_bruteforce(const Graph& g) {
    guard_enumeration(g);
    const auto closed = closed_masks(g);
    const Mask all = full_mask(g.order());
    for (int k = 0; k <= g.order(); ++k) {
        Mask found = 0;
        bool hit = false;
        for_each_combination(
            g.order(), k,
            [&](Mask s) {
                if (coverage(closed, s) == all) {
                    found = s;
                    hit = true;
                    return false;
                }
                return true;
            },
            Deadline{});
        if (hit) return make_certificate(g, from_mask(found), CertificateKind::gamma);
    }
    throw std::logic_error("unreachable: V(G) dominates G");
}

DominationCertificate gamma_exact(const Graph& g, const Deadline& deadline) {
    if (g.order() == 0) return make_certificate(g, {}, CertificateKind::gamma);
    DominationSearch search(g, false, deadline);
    return make_certificate(g, from_mask(search.solve()), CertificateKind::gamma);
}

DominationCertificate idom_exact(const Graph& g, const Deadline& deadline) {
    if (g.order() == 0) return make_certificate(g, {}, CertificateKind::idom);
    DominationSearch search(g, true, deadline);
    return make_certificate(g, from_mask(search.solve()), CertificateKind::idom);
}

DsetEnumeration enumerate_min_dsets(const Graph& g, std::size_t limit, const Deadline& deadline) {
    guard_enumeration(g);
    const int gamma = static_cast<int>(gamma_exact(g, deadline).size);
    const auto closed = closed_masks(g);
    const Mask all = full_mask(g.order());
    DsetEnumeration out;
    for_each_combination(
        g.order(), gamma,
        [&](Mask s) {
            if (coverage(closed, s) != all) return true;
            if (out.sets.size() == limit) {
                out.truncated = true;
                return false;
            }
            out.sets.push_back(from_mask(s));
            return true;
        },
        deadline);
    return out;
}

DominationCertificate gamma_min_edges(const Graph& g, const Deadline& deadline) {
    auto all = enumerate_min_dsets(g, static_cast<std::size_t>(-1), deadline);
    const VertexSet* best = nullptr;
    std::size_t best_edges = 0;
    for (const auto& s : all.sets) {
        std::size_t e = induced_edge_count(g, s);
        if (!best || e < best_edges) {
            best = &s;
            best_edges = e;
        }
    }
    return make_certificate(g, *best, CertificateKind::gamma_min_edges);
}

}  // namespace domlab
