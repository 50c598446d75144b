#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "detail/canonical.hpp"
#include "detail/rooted_tree.hpp"
#include "wsm/disjoint_set.hpp"
#include "wsm/cut_model.hpp"

namespace wsm {

namespace detail {

RootedTree::RootedTree(std::size_t node_count,
                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges, std::uint32_t root)
    : root_(root) {
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(node_count);
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
        adj[edges[i].first].push_back({edges[i].second, i});
        adj[edges[i].second].push_back({edges[i].first, i});
    }
    constexpr auto none = 0xffffffffu;
    parent_.assign(node_count, none);
    parent_edge_.assign(node_count, none);
    depth_.assign(node_count, 0);
    lower_end_.assign(edges.size(), none);
    order_.reserve(node_count);
    order_.push_back(root);
    parent_[root] = root;
    for (std::size_t head = 0; head < order_.size(); ++head) {
        const auto x = order_[head];
        for (auto [y, e] : adj[x]) {
            if (e == parent_edge_[x]) continue;
            parent_[y] = x;
            parent_edge_[y] = e;
            depth_[y] = depth_[x] + 1;
            lower_end_[e] = y;
            order_.push_back(y);
        }
    }
    std::size_t levels = 1;
    while ((std::size_t{1} << levels) < node_count) ++levels;
    up_.assign(levels, parent_);
    for (std::size_t k = 1; k < levels; ++k)
        for (std::size_t x = 0; x < node_count; ++x) up_[k][x] = up_[k - 1][up_[k - 1][x]];
}

std::uint32_t RootedTree::lca(std::uint32_t a, std::uint32_t b) const {
    if (depth_[a] < depth_[b]) std::swap(a, b);
    std::uint32_t diff = depth_[a] - depth_[b];
    for (std::size_t k = 0; diff; ++k, diff >>= 1)
        if (diff & 1) a = up_[k][a];
    if (a == b) return a;
    for (std::size_t k = up_.size(); k-- > 0;) {
        if (up_[k][a] != up_[k][b]) {
            a = up_[k][a];
            b = up_[k][b];
        }
    }
    return parent_[a];
}

CactusModel canonical_model(std::size_t node_count, const std::vector<std::pair<NodeId, NodeId>>& edges,
                            const std::vector<NodeId>& leaf_of_vertex) {
    const std::size_t n = leaf_of_vertex.size();
    RootedTree tree(node_count, edges, leaf_of_vertex[0]);

    std::vector<VertexId> vertex_at(node_count, CactusModel::kNoVertex);
    for (VertexId v = 0; v < n; ++v) vertex_at[leaf_of_vertex[v]] = v;
    std::vector<std::uint32_t> leaves(node_count, 0), min_vertex(node_count, CactusModel::kNoVertex);
    for (std::size_t i = tree.order().size(); i-- > 0;) {
        const auto x = tree.order()[i];
        if (vertex_at[x] != CactusModel::kNoVertex) {
            leaves[x] += 1;
            min_vertex[x] = std::min(min_vertex[x], vertex_at[x]);
        }
        if (x != tree.root()) {
            const auto p = tree.parent()[x];
            leaves[p] += leaves[x];
            min_vertex[p] = std::min(min_vertex[p], min_vertex[x]);
        }
    }

    std::vector<NodeId> internal;
    for (NodeId x = 0; x < node_count; ++x)
        if (vertex_at[x] == CactusModel::kNoVertex) internal.push_back(x);
    std::sort(internal.begin(), internal.end(), [&](NodeId a, NodeId b) {
        if (leaves[a] != leaves[b]) return leaves[a] > leaves[b];
        return min_vertex[a] < min_vertex[b];
    });

    std::vector<NodeId> rename(node_count);
    for (VertexId v = 0; v < n; ++v) rename[leaf_of_vertex[v]] = v;
    for (std::size_t r = 0; r < internal.size(); ++r) rename[internal[r]] = static_cast<NodeId>(n + r);

    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) {
        a = rename[a];
        b = rename[b];
        out.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(out.begin(), out.end());
    std::vector<NodeId> phi(n);
    std::iota(phi.begin(), phi.end(), 0u);
    const NodeId root = internal.empty() ? 0 : static_cast<NodeId>(n);
    return CactusModel(node_count, std::move(out), std::move(phi), root);
}

}  // namespace detail

CactusModel::CactusModel(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges,
                         std::vector<NodeId> phi, NodeId root)
    : edges_(std::move(edges)), adjacency_(node_count), phi_(std::move(phi)),
      leaf_vertex_(node_count, kNoVertex), root_(root) {
    if (root_ >= node_count && node_count > 0) throw Error(ErrorCode::BadParameters, "root out of range");
    for (auto [a, b] : edges_) {
        if (a >= node_count || b >= node_count) throw Error(ErrorCode::BadParameters, "tree edge out of range");
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
    for (VertexId v = 0; v < phi_.size(); ++v) {
        if (phi_[v] >= node_count) throw Error(ErrorCode::BadParameters, "phi out of range");
        leaf_vertex_[phi_[v]] = v;
    }
}

std::vector<EdgeCut> enumerate_3cuts_bruteforce(const CubicGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 22) throw Error(ErrorCode::TooLarge, "brute force is limited to n <= 22, got " + std::to_string(n));
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is disconnected");
    std::vector<EdgeCut> cuts;
    if (n < 2) return cuts;

    // Gray code over subsets of {1..n-1}: each step moves one vertex across
    // and updates the crossing count from its three edges.
    std::vector<char> in(n, 0);
    int crossing = 0;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < total; ++i) {
        const VertexId v = static_cast<VertexId>(std::countr_zero(i)) + 1;
        for (std::uint32_t slot : g.incident(v)) crossing += in[g.other_end(slot, v)] == in[v] ? 1 : -1;
        in[v] ^= 1;
        if (crossing != 3) continue;
        EdgeCut cut;
        for (VertexId x = 1; x < n; ++x)
            if (in[x]) cut.side.push_back(x);
        for (const Edge& e : g.edges())
            if (in[e.u] != in[e.v]) cut.edges.push_back(e.id);
        std::sort(cut.edges.begin(), cut.edges.end());
        cuts.push_back(std::move(cut));
    }
    std::sort(cuts.begin(), cuts.end(), [](const EdgeCut& a, const EdgeCut& b) { return a.edges < b.edges; });
    return cuts;
}

namespace {

detail::RootedTree rooted_at_vertex0(const CactusModel& m) {
    return detail::RootedTree(m.node_count(), m.edges(), m.phi(0));
}

}  // namespace

EdgeCut tree_edge_cut(const CactusModel& m, const CubicGraph& g, std::size_t tree_edge) {
    if (tree_edge >= m.edges().size())
        throw Error(ErrorCode::UnknownEdge, "tree edge " + std::to_string(tree_edge) + " does not exist");
    const auto [a, b] = m.edges()[tree_edge];
    // Collect the leaves reachable from b without using the edge, then keep
    // whichever shore avoids vertex 0.
    std::vector<char> seen(m.node_count(), 0);
    std::vector<NodeId> stack{b};
    seen[a] = seen[b] = 1;
    std::vector<char> in(g.vertex_count(), 0);
    while (!stack.empty()) {
        const NodeId x = stack.back();
        stack.pop_back();
        if (VertexId v = m.leaf_vertex(x); v != CactusModel::kNoVertex) in[v] = 1;
        for (NodeId y : m.neighbours(x))
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    if (in[0])
        for (auto& f : in) f ^= 1;
    EdgeCut cut;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (in[v]) cut.side.push_back(v);
    cut.edges = delta(g, cut.side);
    return cut;
}

std::vector<std::uint32_t> tree_edge_crossings(const CactusModel& m, const CubicGraph& g,
                                               std::span<const EdgeId> subset) {
    const auto tree = rooted_at_vertex0(m);
    std::vector<std::int64_t> diff(m.node_count(), 0);
    for (EdgeId id : subset) {
        const Edge& e = g.edge(id);
        const auto a = m.phi(e.u), b = m.phi(e.v);
        diff[a] += 1;
        diff[b] += 1;
        diff[tree.lca(a, b)] -= 2;
    }
    std::vector<std::uint32_t> out(m.edges().size(), 0);
    for (std::size_t i = tree.order().size(); i-- > 1;) {
        const auto x = tree.order()[i];
        out[tree.parent_edge()[x]] = static_cast<std::uint32_t>(diff[x]);
        diff[tree.parent()[x]] += diff[x];
    }
    return out;
}

std::vector<std::array<EdgeId, 3>> tree_edge_cut_edges(const CactusModel& m, const CubicGraph& g) {
    const auto tree = rooted_at_vertex0(m);
    std::vector<std::array<EdgeId, 3>> out(m.edges().size());
    std::vector<std::uint8_t> fill(m.edges().size(), 0);
    auto push = [&](std::uint32_t tree_edge, EdgeId id) {
        if (fill[tree_edge] == 3) throw Error(ErrorCode::ModelMismatch, "tree edge crossed by more than 3 edges");
        out[tree_edge][fill[tree_edge]++] = id;
    };
    // On a valid model the paths have total length 3|E(T)|, and the guard in
    // push stops an invalid one early.
    for (const Edge& e : g.edges()) {
        auto a = m.phi(e.u), b = m.phi(e.v);
        const auto top = tree.lca(a, b);
        for (; a != top; a = tree.parent()[a]) push(tree.parent_edge()[a], e.id);
        for (; b != top; b = tree.parent()[b]) push(tree.parent_edge()[b], e.id);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (fill[i] != 3) throw Error(ErrorCode::ModelMismatch, "tree edge crossed by fewer than 3 edges");
        std::sort(out[i].begin(), out[i].end());
    }
    return out;
}

std::vector<std::uint32_t> tree_edge_side_sizes(const CactusModel& m) {
    const auto tree = rooted_at_vertex0(m);
    std::vector<std::uint32_t> leaves(m.node_count(), 0);
    std::vector<std::uint32_t> out(m.edges().size(), 0);
    for (std::size_t i = tree.order().size(); i-- > 1;) {
        const auto x = tree.order()[i];
        if (m.kind(x) == NodeKind::Leaf) leaves[x] += 1;
        out[tree.parent_edge()[x]] = leaves[x];
        leaves[tree.parent()[x]] += leaves[x];
    }
    return out;
}

namespace {

std::string edge_list(const std::array<EdgeId, 3>& e) {
    return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "}";
}

ValidationReport fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

ValidationReport validate_cactus(const CactusModel& m, const CubicGraph& g, Validation depth) {
    const std::size_t n = g.vertex_count();
    const std::size_t nodes = m.node_count();
    if (m.vertex_count() != n)
        return fail("phi covers " + std::to_string(m.vertex_count()) + " vertices, graph has " + std::to_string(n));
    if (n < 2) return fail("graph has fewer than 2 vertices");

    std::vector<char> used(nodes, 0);
    for (VertexId v = 0; v < n; ++v) {
        if (used[m.phi(v)]) return fail("phi is not injective at vertex " + std::to_string(v));
        used[m.phi(v)] = 1;
    }
    if (m.edges().size() + 1 != nodes) return fail("edge count is not node count - 1, so T is not a tree");
    for (auto [a, b] : m.edges())
        if (a == b) return fail("tree has a loop at node " + std::to_string(a));
    {
        DisjointSet ds(nodes);
        for (auto [a, b] : m.edges())
            if (ds.find(a) == ds.find(b)) return fail("tree contains a cycle through node " + std::to_string(a));
            else ds.unite(a, b);
    }
    if (m.edges().size() > 2 * n - 3)
        return fail("tree has " + std::to_string(m.edges().size()) + " edges, more than 2n-3 = " +
                    std::to_string(2 * n - 3));
    for (NodeId x = 0; x < nodes; ++x) {
        const auto deg = m.neighbours(x).size();
        if (m.kind(x) == NodeKind::Leaf && deg != 1)
            return fail("leaf node " + std::to_string(x) + " has degree " + std::to_string(deg));
        if (m.kind(x) == NodeKind::Empty && deg < 3)
            return fail("empty node " + std::to_string(x) + " has degree " + std::to_string(deg) + " < 3");
    }

    std::vector<EdgeId> all(g.edge_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = g.edge_at(i).id;
    const auto cross = tree_edge_crossings(m, g, all);
    for (std::size_t i = 0; i < cross.size(); ++i)
        if (cross[i] != 3)
            return fail("tree edge (" + std::to_string(m.edges()[i].first) + "," + std::to_string(m.edges()[i].second) +
                        ") induces a cut of size " + std::to_string(cross[i]));

    auto cuts = tree_edge_cut_edges(m, g);
    std::sort(cuts.begin(), cuts.end());
    if (auto dup = std::adjacent_find(cuts.begin(), cuts.end()); dup != cuts.end())
        return fail("cut " + edge_list(*dup) + " is represented by two tree edges");

    if (depth == Validation::Exhaustive && n <= 22) {
        for (const auto& cut : enumerate_3cuts_bruteforce(g)) {
            const std::array<EdgeId, 3> key{cut.edges[0], cut.edges[1], cut.edges[2]};
            if (!std::binary_search(cuts.begin(), cuts.end(), key))
                return fail("3-edge cut " + edge_list(key) + " is not represented by any tree edge");
        }
    }
    return {};
}

std::string to_dot(const CactusModel& m) {
    std::ostringstream out;
    out << "graph cactus {\n";
    out << "  node [shape=circle, label=\"\", width=0.15];\n";
    for (NodeId x = 0; x < m.node_count(); ++x)
        if (m.kind(x) == NodeKind::Leaf)
            out << "  " << x << " [label=\"" << m.leaf_vertex(x) << "\", width=0.3];\n";
    for (auto [a, b] : m.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const CactusModel& m) {
    nlohmann::json nodes = nlohmann::json::array();
    for (NodeId x = 0; x < m.node_count(); ++x) {
        nlohmann::json node{{"id", x}};
        if (m.kind(x) == NodeKind::Leaf) {
            node["kind"] = "leaf";
            node["vertex"] = m.leaf_vertex(x);
        } else {
            node["kind"] = "empty";
        }
        nodes.push_back(std::move(node));
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : m.edges()) edges.push_back({a, b});
    nlohmann::json doc{{"nodes", std::move(nodes)},
                       {"edges", std::move(edges)},
                       {"phi", m.phi()},
                       {"root", m.root()},
                       {"nontrivial_cuts", m.nontrivial_cut_count()}};
    return doc.dump(2) + "\n";
}

}  // namespace wsm
