#pragma once

#include <cstdint>

#include "domlab/audit.hpp"
#include "domlab/budget.hpp"
#include "domlab/collections.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// 3-connected graphs contain a cycle of length 0 mod 3.
/// Throws std::invalid_argument when connectivity < 3.
AuditVerdict audit_claim_nonempty(const Graph& g, const Deadline& deadline = {});

/// Every pair of union vertices is joined, inside the union of the member
/// cycles, by two y-3-paths whose second vertices differ and whose
/// penultimate vertices differ. `path_budget` caps the paths explored per pair.
AuditVerdict audit_claim_two_y3paths(const Graph& g, const CycleCollection& c, const VertexSet& y,
                                     std::int64_t path_budget = 200000);

/// Every component of g minus the union has at most one vertex r and then
/// N(r) is inside x. Throws when connectivity < 3 or x is invalid.
AuditVerdict audit_claim_R1(const Graph& g, const CycleCollection& c, const VertexSet& x);

struct DsetPipelineOptions {
    std::size_t cycle_limit = 20000;
    std::size_t assignment_limit = 100000;
    Deadline deadline{};
};

/// Builds every C_SG, derives D_SG, completes each consistent X-3 assignment
/// to a dominating set by adding undominated vertices in ascending order,
/// and compares the smallest candidate with gamma. Holds iff some candidate
/// has size gamma. Throws std::invalid_argument when connectivity < 3.
AuditVerdict dset_from_DSG(const Graph& g, const DsetPipelineOptions& options = {});

/// The same pipeline without the connectivity gate (used by reports).
AuditVerdict dset_pipeline(const Graph& g, const DsetPipelineOptions& options = {});

/// Completion step used by dset_from_DSG.
VertexSet complete_to_dominating(const Graph& g, const VertexSet& x);

}  // namespace domlab
