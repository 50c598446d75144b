#include <algorithm>

#include "detail/canonical.hpp"
#include "wsm/cut_model.hpp"

namespace wsm {

namespace {

struct RawTree {
    std::size_t nodes = 0;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> leaf_of_vertex;
};

// Sink-side flags of some nontrivial 3-edge cut, or empty if there is none.
// Every nontrivial cut has an edge at vertex 0 on 0's shore (that shore has
// at least two vertices and is connected) and some edge {y1, y2} on the other
// shore, so contracting both pairs and asking for a flow of 3 finds it.
std::vector<char> find_nontrivial_shore(const Multigraph& h) {
    std::vector<char> side;
    if (h.vertex_count() < 6) return side;
    for (std::uint32_t s0 : h.incident(0)) {
        const VertexId src[] = {0, h.other_end(s0, 0)};
        for (const Edge& f : h.edges()) {
            if (f.u == src[0] || f.u == src[1] || f.v == src[0] || f.v == src[1]) continue;
            const VertexId sink[] = {f.u, f.v};
            if (max_flow_between(h, src, sink, 4, &side) == 3) return side;
        }
    }
    side.clear();
    return side;
}

RawTree split_and_glue(const Multigraph& h) {
    const auto n = static_cast<NodeId>(h.vertex_count());
    RawTree out;
    out.leaf_of_vertex.resize(n);
    for (VertexId v = 0; v < n; ++v) out.leaf_of_vertex[v] = v;
    if (n == 2) {
        out.nodes = 2;
        out.edges = {{0, 1}};
        return out;
    }
    const auto side = find_nontrivial_shore(h);
    if (side.empty()) {
        out.nodes = n + 1;
        for (VertexId v = 0; v < n; ++v) out.edges.push_back({n, v});
        return out;
    }

    std::vector<VertexId> A, rest;
    for (VertexId v = 0; v < n; ++v) (side[v] ? A : rest).push_back(v);
    const auto left = contract(h, A);   // A becomes one vertex
    const auto right = contract(h, rest);
    const RawTree t1 = split_and_glue(left.graph);
    const RawTree t2 = split_and_glue(right.graph);

    // Drop the two leaves that stand for the contracted shores and join
    // their neighbours by the edge that now represents this cut.
    const NodeId l1 = t1.leaf_of_vertex[left.merged];
    const NodeId l2 = t2.leaf_of_vertex[right.merged];
    auto neighbour = [](const RawTree& t, NodeId leaf) {
        for (auto [a, b] : t.edges)
            if (a == leaf) return b;
            else if (b == leaf) return a;
        throw Error(ErrorCode::InternalInvariantViolation, "contracted leaf has no neighbour");
    };
    auto rename1 = [&](NodeId x) { return x < l1 ? x : x - 1; };
    const auto shift = static_cast<NodeId>(t1.nodes - 1);
    auto rename2 = [&](NodeId x) { return shift + (x < l2 ? x : x - 1); };

    out.nodes = t1.nodes + t2.nodes - 2;
    for (auto [a, b] : t1.edges)
        if (a != l1 && b != l1) out.edges.push_back({rename1(a), rename1(b)});
    for (auto [a, b] : t2.edges)
        if (a != l2 && b != l2) out.edges.push_back({rename2(a), rename2(b)});
    out.edges.push_back({rename1(neighbour(t1, l1)), rename2(neighbour(t2, l2))});
    for (VertexId v = 0; v < n; ++v)
        out.leaf_of_vertex[v] = side[v] ? rename2(t2.leaf_of_vertex[right.vertex_map[v]])
                                        : rename1(t1.leaf_of_vertex[left.vertex_map[v]]);
    return out;
}

}  // namespace

CactusModel build_cactus_recursive(const CubicGraph& g) {
    if (edge_connectivity_by_flow(g) < 3 || !is_connected(g))
        throw Error(ErrorCode::NotThreeEdgeConnected, "graph is not 3-edge-connected");
    const RawTree t = split_and_glue(g);
    return detail::canonical_model(t.nodes, t.edges, t.leaf_of_vertex);
}

}  // namespace wsm
