#pragma once

#include <array>
#include <span>
#include <vector>

#include "wsm/cut_model.hpp"
#include "wsm/graph.hpp"
#include "wsm/matching.hpp"

namespace wsm {

// One internal, non-root cactus node x. Its part A_x is the union of the
// leaf sets below `members`. The piece is G with everything outside A_x
// shrunk to the hub and every member shrunk to one vertex, which makes it a
// cubic graph on members.size() + 1 vertices that keeps the original edge ids.
struct NodeRecord {
    NodeId node = 0;
    NodeId parent = 0;
    std::vector<NodeId> members;  // piece vertex i stands for members[i]
    CubicGraph piece;
    VertexId hub_in_piece = 0;     // == members.size()
    VertexId hub_in_remainder = 0;  // vertex of x in the parent's piece (or in final_graph)
    std::array<EdgeId, 3> cut{};    // the edges leaving A_x, ascending
};

struct DecompositionPlan {
    NodeId root = 0;                 // internal node of largest degree, lowest id on ties
    std::vector<NodeRecord> records;  // children before parents
    std::vector<NodeId> root_members;
    CubicGraph final_graph;  // the root's members, joined by their cut edges
    std::size_t edge_count = 0;  // of the original graph, whose edge ids are dense
};

// Throws ModelMismatch when m is not a valid cactus of g.
DecompositionPlan decompose(const CubicGraph& g, const CactusModel& m);

// Perfect matching of the original graph. A perfect matching of the final
// graph is extended piece by piece, parents first; at each piece the edge
// already chosen at the hub is forced.
Matching assemble(const DecompositionPlan& plan);

// Perfect matching meeting every 3-edge cut in exactly one edge.
// Throws NotThreeEdgeConnected.
Matching well_spread_matching(const CubicGraph& g);

struct CutViolation {
    std::uint32_t side_size = 0;
    std::array<EdgeId, 3> cut_edges{};
    std::uint32_t intersection = 0;
};

struct WellSpreadVerdict {
    bool perfect = false;
    bool well_spread = false;
    std::size_t cut_count = 0;  // tree edges checked
    std::vector<CutViolation> violations;
};

// Throws ModelMismatch when m is not a valid cactus of g.
WellSpreadVerdict is_well_spread(const CubicGraph& g, std::span<const EdgeId> M, const CactusModel& m);

}  // namespace wsm
