#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "domlab/collections.hpp"
#include "domlab/cycles.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// Attachment types of a vertex o outside a leftover component:
///   a  o on the cycle union and in X
///   b  o in R' with no X-neighbor on the union
///   c  o in R' with an X-neighbor on the union
///   d  o on the cycle union and not in X
enum class AttachmentType : char { a = 'a', b = 'b', c = 'c', d = 'd' };

/// One row of the seam extension table: a path of length = residue (mod 3)
/// between attachments of types `first` and `second` (first <= second).
struct SeamRow {
    int row;
    int residue;
    AttachmentType first;
    AttachmentType second;
};

inline constexpr std::array<SeamRow, 20> kSeamTable{{
    {1, 2, AttachmentType::a, AttachmentType::a},  {2, 0, AttachmentType::a, AttachmentType::b},
    {3, 2, AttachmentType::a, AttachmentType::b},  {4, 1, AttachmentType::a, AttachmentType::c},
    {5, 0, AttachmentType::a, AttachmentType::d},  {6, 1, AttachmentType::a, AttachmentType::d},
    {7, 1, AttachmentType::b, AttachmentType::b},  {8, 2, AttachmentType::b, AttachmentType::b},
    {9, 0, AttachmentType::b, AttachmentType::b},  {10, 1, AttachmentType::b, AttachmentType::c},
    {11, 2, AttachmentType::b, AttachmentType::c}, {12, 0, AttachmentType::b, AttachmentType::d},
    {13, 2, AttachmentType::b, AttachmentType::d}, {14, 1, AttachmentType::b, AttachmentType::d},
    {15, 0, AttachmentType::c, AttachmentType::c}, {16, 0, AttachmentType::c, AttachmentType::d},
    {17, 2, AttachmentType::c, AttachmentType::d}, {18, 2, AttachmentType::d, AttachmentType::d},
    {19, 0, AttachmentType::d, AttachmentType::d}, {20, 1, AttachmentType::d, AttachmentType::d},
}};

/// Row matching an unordered type pair and a path length, if any.
std::optional<SeamRow> seam_row_for(AttachmentType t1, AttachmentType t2, std::size_t length);

struct SeamExtension {
    Path path;
    int table_row = 0;
};

struct AttachmentReport {
    VertexSet component_vertices;
    std::vector<std::pair<Vertex, AttachmentType>> attachments;
    std::optional<SeamExtension> extension;
    /// Set when some path search ran out of budget before a row was found.
    bool search_incomplete = false;
};

/// Vertices off the union with at most one neighbor off the union.
VertexSet compute_R_prime(const Graph& g, const VertexSet& vertex_union);

/// Types an attachment vertex; throws if o is neither on the union nor in r_prime.
AttachmentType attachment_type(const Graph& g, const VertexSet& vertex_union, const VertexSet& x,
                               const VertexSet& r_prime, Vertex o);

inline constexpr std::int64_t kDefaultPathBudget = 200000;

/// One report per component of g - (union u r_prime), each with its typed
/// attachments and the first seam extension found. Throws if x is not a
/// valid assignment for c.
std::vector<AttachmentReport> classify_attachments(const Graph& g, const CycleCollection& c, const VertexSet& x,
                                                   const VertexSet& r_prime,
                                                   std::int64_t path_budget = kDefaultPathBudget);

struct SeamSearch {
    std::optional<SeamExtension> extension;
    bool incomplete = false;
};

/// Searches paths through m between pairs of attachment vertices (ascending
/// pairs, then table rows in order) for a length/type combination of the
/// table. m must be a component of g - (union u R').
SeamSearch detect_seam_extension(const Graph& g, const CycleCollection& c, const VertexSet& x, const VertexSet& m,
                                 std::int64_t path_budget = kDefaultPathBudget);

}  // namespace domlab
