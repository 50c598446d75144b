#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsm/error.hpp"

namespace wsm {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;
};

// Loopless multigraph whose edges carry caller-chosen ids. Ids survive
// contraction, which is what lets matchings found on contracted pieces be
// glued back together. Edges are kept in construction order; a "slot" is a
// position in that order.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge_at(std::size_t slot) const { return edges_[slot]; }

    // Slots of the edges incident to v, in slot order.
    std::span<const std::uint32_t> incident(VertexId v) const {
        return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    VertexId other_end(std::size_t slot, VertexId v) const {
        const Edge& e = edges_[slot];
        return e.u == v ? e.v : e.u;
    }

    bool has_edge(EdgeId id) const;
    // Throws UnknownEdge.
    std::size_t slot_of(EdgeId id) const;
    const Edge& edge(EdgeId id) const { return edges_[slot_of(id)]; }

private:
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> incidence_;
    bool dense_ids_ = true;  // edges_[i].id == i for every i
    std::unordered_map<EdgeId, std::uint32_t> slot_by_id_;
};

// A multigraph that has been checked to be 3-regular with an even number of
// vertices. Connectivity is not part of the type; operations that need
// 3-edge-connectivity check it themselves.
class CubicGraph : public Multigraph {
public:
    CubicGraph() = default;
    // Throws NotCubic or OddOrder.
    explicit CubicGraph(Multigraph g);
};

// Edge ids are input positions.
CubicGraph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

struct Contraction {
    Multigraph graph;
    std::vector<VertexId> vertex_map;  // old vertex -> new vertex
    VertexId merged;                   // new id of the contracted set
};

// Contracts S to a single vertex (the last id). Edges inside S disappear,
// every other edge keeps its id. Vertices outside S keep their relative order.
Contraction contract(const Multigraph& g, std::span<const VertexId> S);

// Ids of edges with exactly one end in S, ascending.
std::vector<EdgeId> delta(const Multigraph& g, std::span<const VertexId> S);

bool is_connected(const Multigraph& g);

// Exact for every k. k <= 3 runs in near-linear time; larger k falls back to
// unit-capacity max-flow.
bool edge_connectivity_at_least(const Multigraph& g, int k);

// Global edge connectivity by n-1 max-flows from vertex 0. Quadratic; kept as
// an independent oracle.
int edge_connectivity_by_flow(const Multigraph& g);

// Max-flow value between two vertex sets in the unit-capacity undirected
// graph, capped at `cap`. When `sink_side` is given and the flow is below the
// cap, it receives the membership flags of the minimal sink-side min cut.
int max_flow_between(const Multigraph& g, std::span<const VertexId> sources,
                     std::span<const VertexId> sinks, int cap,
                     std::vector<char>* sink_side = nullptr);

}  // namespace wsm
