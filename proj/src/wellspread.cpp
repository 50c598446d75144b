#include "wsm/wellspread.hpp"

#include <algorithm>
#include <string>

namespace wsm {

namespace {

void require_valid(const CactusModel& m, const CubicGraph& g) {
    const auto report = validate_cactus(m, g, Validation::Structural);
    if (!report.ok) throw Error(ErrorCode::ModelMismatch, report.failure);
}

// Cubic graph on the members (plus an optional hub) whose edges are the
// members' cut edges. An edge listed by two members joins them; an edge
// listed once leaves the part and goes to the hub.
CubicGraph piece_from_cuts(const std::vector<std::array<EdgeId, 3>>& cuts, bool with_hub,
                           std::array<EdgeId, 3>* outside) {
    std::vector<std::pair<EdgeId, VertexId>> ends;
    ends.reserve(3 * cuts.size());
    for (VertexId i = 0; i < cuts.size(); ++i)
        for (EdgeId e : cuts[i]) ends.push_back({e, i});
    std::sort(ends.begin(), ends.end());

    const auto hub = static_cast<VertexId>(cuts.size());
    std::vector<Edge> edges;
    std::size_t leaving = 0;
    for (std::size_t i = 0; i < ends.size();) {
        if (i + 1 < ends.size() && ends[i + 1].first == ends[i].first) {
            edges.push_back({ends[i].first, ends[i].second, ends[i + 1].second});
            i += 2;
            continue;
        }
        if (!with_hub || leaving == 3)
            throw Error(ErrorCode::ModelMismatch, "part is left by more edges than its cut allows");
        (*outside)[leaving++] = ends[i].first;
        edges.push_back({ends[i].first, ends[i].second, hub});
        ++i;
    }
    if (with_hub && leaving != 3) throw Error(ErrorCode::ModelMismatch, "part is not bounded by a 3-edge cut");
    return CubicGraph(Multigraph(cuts.size() + (with_hub ? 1 : 0), std::move(edges)));
}

}  // namespace

DecompositionPlan decompose(const CubicGraph& g, const CactusModel& m) {
    require_valid(m, g);
    for (std::size_t s = 0; s < g.edge_count(); ++s)
        if (g.edge_at(s).id != s) throw Error(ErrorCode::BadParameters, "decompose expects edge ids 0..m-1");

    DecompositionPlan plan;
    plan.edge_count = g.edge_count();
    const std::size_t nodes = m.node_count();

    std::size_t best_degree = 0;
    for (NodeId x = 0; x < nodes; ++x)
        if (m.kind(x) == NodeKind::Empty && m.neighbours(x).size() > best_degree) {
            best_degree = m.neighbours(x).size();
            plan.root = x;
        }
    if (best_degree == 0) {  // the 2-vertex theta graph: nothing to split
        plan.root = m.phi(0);
        plan.final_graph = g;
        return plan;
    }

    // Children-first order by an explicit DFS, children ascending.
    std::vector<NodeId> parent(nodes, plan.root), post;
    post.reserve(nodes);
    std::vector<std::pair<NodeId, std::size_t>> stack{{plan.root, 0}};
    while (!stack.empty()) {
        auto& [x, next] = stack.back();
        const auto& nb = m.neighbours(x);
        if (next == nb.size()) {
            post.push_back(x);
            stack.pop_back();
            continue;
        }
        const NodeId y = nb[next++];
        if (x != plan.root && y == parent[x]) continue;
        parent[y] = x;
        stack.push_back({y, 0});
    }

    std::vector<std::array<EdgeId, 3>> cut_of(nodes);
    std::vector<VertexId> position(nodes, 0);
    std::vector<std::array<EdgeId, 3>> member_cuts;
    std::size_t piece_vertices = 0;
    for (NodeId x : post) {
        if (m.kind(x) == NodeKind::Leaf) {
            const auto inc = g.incident(m.leaf_vertex(x));
            cut_of[x] = {g.edge_at(inc[0]).id, g.edge_at(inc[1]).id, g.edge_at(inc[2]).id};
            std::sort(cut_of[x].begin(), cut_of[x].end());
            continue;
        }
        std::vector<NodeId> members;
        for (NodeId y : m.neighbours(x))
            if (x == plan.root || y != parent[x]) {
                position[y] = static_cast<VertexId>(members.size());
                members.push_back(y);
            }
        member_cuts.clear();
        for (NodeId y : members) member_cuts.push_back(cut_of[y]);
        piece_vertices += members.size() + (x == plan.root ? 0 : 1);

        if (x == plan.root) {
            plan.final_graph = piece_from_cuts(member_cuts, false, nullptr);
            plan.root_members = std::move(members);
            continue;
        }
        NodeRecord rec;
        rec.node = x;
        rec.parent = parent[x];
        rec.piece = piece_from_cuts(member_cuts, true, &rec.cut);
        rec.hub_in_piece = static_cast<VertexId>(members.size());
        rec.members = std::move(members);
        cut_of[x] = rec.cut;
        plan.records.push_back(std::move(rec));
    }
    for (auto& rec : plan.records) rec.hub_in_remainder = position[rec.node];

    const std::size_t n = g.vertex_count();
    WSM_CHECK(piece_vertices <= 2 * (2 * n - 3), "pieces are larger than the tree-size bound allows");
    return plan;
}

Matching assemble(const DecompositionPlan& plan) {
    std::vector<char> in(plan.edge_count, 0);
    for (EdgeId e : perfect_matching(plan.final_graph)) in[e] = 1;
    for (auto it = plan.records.rbegin(); it != plan.records.rend(); ++it) {
        int chosen = -1;
        for (int i = 0; i < 3; ++i)
            if (in[it->cut[i]]) {
                WSM_CHECK(chosen == -1, "hub of node " + std::to_string(it->node) + " is matched twice");
                chosen = i;
            }
        WSM_CHECK(chosen != -1, "hub of node " + std::to_string(it->node) + " is unmatched");
        for (EdgeId e : perfect_matching_containing(it->piece, it->cut[chosen])) in[e] = 1;
    }
    Matching out;
    for (EdgeId e = 0; e < plan.edge_count; ++e)
        if (in[e]) out.push_back(e);
    return out;
}

Matching well_spread_matching(const CubicGraph& g) {
    const auto model = build_cactus(g);
    auto M = assemble(decompose(g, model));
    WSM_CHECK(is_perfect_matching(g, M), "assembled matching is not perfect");
    return M;
}

WellSpreadVerdict is_well_spread(const CubicGraph& g, std::span<const EdgeId> M, const CactusModel& m) {
    require_valid(m, g);
    WellSpreadVerdict verdict;
    verdict.perfect = is_perfect_matching(g, M);
    verdict.cut_count = m.edges().size();
    const auto hits = tree_edge_crossings(m, g, M);
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < hits.size(); ++i)
        if (hits[i] != 1) bad.push_back(i);
    if (!bad.empty()) {
        const auto cuts = tree_edge_cut_edges(m, g);
        const auto sizes = tree_edge_side_sizes(m);
        for (auto i : bad) verdict.violations.push_back({sizes[i], cuts[i], hits[i]});
    }
    verdict.well_spread = verdict.perfect && verdict.violations.empty();
    return verdict;
}

}  // namespace wsm
