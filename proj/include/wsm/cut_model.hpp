#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wsm/graph.hpp"

namespace wsm {

using NodeId = std::uint32_t;

// A 3-edge cut of a cubic graph. `side` is the shore that does not contain
// vertex 0, sorted; `edges` are the cut edges, sorted by id.
struct EdgeCut {
    std::vector<VertexId> side;
    std::vector<EdgeId> edges;

    friend bool operator==(const EdgeCut&, const EdgeCut&) = default;
};

enum class NodeKind { Leaf, Empty };

// Tree whose leaves are the graph vertices and whose edges stand for the
// 3-edge cuts: removing a tree edge splits the leaves into the two shores of
// its cut. Node kinds are implied by phi: a node is a leaf iff some vertex
// maps to it.
//
// Models produced by this library are canonical: leaf v is node v, the
// internal nodes come next ordered by the size of the leaf set hanging below
// them (seen from leaf 0, largest first, ties by smallest vertex), and edges
// are stored as (min, max) pairs in sorted order. Two builds of the same graph
// therefore compare equal.
class CactusModel {
public:
    CactusModel() = default;
    CactusModel(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges,
                std::vector<NodeId> phi, NodeId root);

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t vertex_count() const { return phi_.size(); }
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    const std::vector<NodeId>& neighbours(NodeId x) const { return adjacency_[x]; }
    NodeKind kind(NodeId x) const { return leaf_vertex_[x] == kNoVertex ? NodeKind::Empty : NodeKind::Leaf; }
    NodeId phi(VertexId v) const { return phi_[v]; }
    const std::vector<NodeId>& phi() const { return phi_; }
    // kNoVertex for empty nodes.
    VertexId leaf_vertex(NodeId x) const { return leaf_vertex_[x]; }
    NodeId root() const { return root_; }

    // Each vertex contributes one trivial cut; on the 2-vertex theta graph
    // both leaves share the single edge.
    std::size_t nontrivial_cut_count() const {
        return edges_.size() > vertex_count() ? edges_.size() - vertex_count() : 0;
    }

    static constexpr VertexId kNoVertex = 0xffffffffu;

    friend bool operator==(const CactusModel& a, const CactusModel& b) {
        return a.edges_ == b.edges_ && a.phi_ == b.phi_ && a.root_ == b.root_ &&
               a.adjacency_.size() == b.adjacency_.size();
    }

private:
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<NodeId> phi_;
    std::vector<VertexId> leaf_vertex_;
    NodeId root_ = 0;
};

// Every 3-edge cut by checking all 2^(n-1) bipartitions. Test oracle only.
// Throws TooLarge for n > 22 and Disconnected.
std::vector<EdgeCut> enumerate_3cuts_bruteforce(const CubicGraph& g);

// Every 3-edge cut (trivial ones included) as sorted id triples, in sorted
// order. Near-linear on typical inputs. Throws NotThreeEdgeConnected.
std::vector<std::array<EdgeId, 3>> enumerate_3cuts(const CubicGraph& g);

// Canonical cactus. Throws NotThreeEdgeConnected.
CactusModel build_cactus(const CubicGraph& g);

// Same model, built by splitting along nontrivial cuts found with max-flow and
// gluing the two halves. Roughly cubic in n; meant as a cross-check.
CactusModel build_cactus_recursive(const CubicGraph& g);

// The cut of g that tree edge `tree_edge` (an index into m.edges()) stands
// for. On a valid model it has exactly three edges. Throws UnknownEdge.
EdgeCut tree_edge_cut(const CactusModel& m, const CubicGraph& g, std::size_t tree_edge);

// For each tree edge, how many edges of `subset` cross it.
std::vector<std::uint32_t> tree_edge_crossings(const CactusModel& m, const CubicGraph& g,
                                               std::span<const EdgeId> subset);

// For each tree edge, the ids of the graph edges crossing it. Requires every
// tree edge to be crossed by exactly three edges (check with
// tree_edge_crossings first); otherwise throws ModelMismatch.
std::vector<std::array<EdgeId, 3>> tree_edge_cut_edges(const CactusModel& m, const CubicGraph& g);

// Size of the shore of each tree edge that avoids vertex 0.
std::vector<std::uint32_t> tree_edge_side_sizes(const CactusModel& m);

struct ValidationReport {
    bool ok = true;
    std::string failure;  // first violated condition, empty when ok
};

enum class Validation {
    Structural,  // tree shape, leaves, degrees, size bound, every edge a distinct 3-cut
    Exhaustive,  // additionally compares with brute force when n <= 22
};

ValidationReport validate_cactus(const CactusModel& m, const CubicGraph& g,
                                 Validation depth = Validation::Exhaustive);

std::string to_dot(const CactusModel& m);
std::string to_json(const CactusModel& m);

}  // namespace wsm
