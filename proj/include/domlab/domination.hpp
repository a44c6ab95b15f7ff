#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "domlab/budget.hpp"
#include "domlab/graph.hpp"

namespace domlab {

enum class CertificateKind { gamma, idom, gamma_min_edges };

std::string to_string(CertificateKind kind);

/// A dominating set together with the property it certifies.
struct DominationCertificate {
    VertexSet set;
    std::size_t size = 0;
    bool independent = false;
    std::size_t induced_edges = 0;
    CertificateKind kind = CertificateKind::gamma;
};

DominationCertificate make_certificate(const Graph& g, VertexSet set, CertificateKind kind);

/// N[s] = V(g). Throws std::out_of_range for ids outside the graph.
bool is_dominating(const Graph& g, const VertexSet& s);

/// Independent and every vertex outside s has a neighbor in s.
bool is_maximal_independent(const Graph& g, const VertexSet& s);

inline constexpr int kEnumerationMaxOrder = 24;

/// Exhaustive search by increasing size; the witness is the
/// lexicographically smallest minimum dominating set. n <= 24.
DominationCertificate gamma_bruteforce(const Graph& g);

/// Branch and bound over undominated vertices. n <= 64.
DominationCertificate gamma_exact(const Graph& g, const Deadline& deadline = {});

/// Minimum maximal independent set (i(G)). n <= 64.
DominationCertificate idom_exact(const Graph& g, const Deadline& deadline = {});

/// Among minimum dominating sets, one with fewest induced edges; ties go to
/// the lexicographically smallest member list. n <= 24.
DominationCertificate gamma_min_edges(const Graph& g, const Deadline& deadline = {});

struct DsetEnumeration {
    std::vector<VertexSet> sets;
    bool truncated = false;
};

/// All minimum dominating sets in lexicographic order, at most `limit`.
DsetEnumeration enumerate_min_dsets(const Graph& g, std::size_t limit, const Deadline& deadline = {});

}  // namespace domlab
