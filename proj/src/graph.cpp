#include "wsm/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>

#include "detail/cut_space.hpp"

namespace wsm {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::NotCubic: return "NotCubic";
        case ErrorCode::LoopFound: return "LoopFound";
        case ErrorCode::OddOrder: return "OddOrder";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NotThreeEdgeConnected: return "NotThreeEdgeConnected";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
        case ErrorCode::ModelMismatch: return "ModelMismatch";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorCode::BoundViolated: return "BoundViolated";
    }
    return "UnknownError";
}

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges) : edges_(std::move(edges)) {
    offsets_.assign(vertex_count + 1, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw Error(ErrorCode::BadParameters, "edge " + std::to_string(e.id) + " has an endpoint out of range");
        if (e.u == e.v) throw Error(ErrorCode::LoopFound, "edge " + std::to_string(e.id) + " is a loop");
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
        if (e.id != i) dense_ids_ = false;
    }
    for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] += offsets_[v];
    incidence_.resize(2 * edges_.size());
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
        incidence_[fill[edges_[i].u]++] = i;
        incidence_[fill[edges_[i].v]++] = i;
    }
    if (!dense_ids_) {
        slot_by_id_.reserve(edges_.size());
        for (std::uint32_t i = 0; i < edges_.size(); ++i) {
            if (!slot_by_id_.emplace(edges_[i].id, i).second)
                throw Error(ErrorCode::BadParameters, "duplicate edge id " + std::to_string(edges_[i].id));
        }
    }
}

bool Multigraph::has_edge(EdgeId id) const {
    if (dense_ids_) return id < edges_.size();
    return slot_by_id_.count(id) != 0;
}

std::size_t Multigraph::slot_of(EdgeId id) const {
    if (dense_ids_) {
        if (id < edges_.size()) return id;
    } else if (auto it = slot_by_id_.find(id); it != slot_by_id_.end()) {
        return it->second;
    }
    throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(id) + " is not in the graph");
}

CubicGraph::CubicGraph(Multigraph g) : Multigraph(std::move(g)) {
    if (vertex_count() % 2 != 0)
        throw Error(ErrorCode::OddOrder, std::to_string(vertex_count()) + " vertices");
    for (VertexId v = 0; v < vertex_count(); ++v) {
        if (degree(v) != 3)
            throw Error(ErrorCode::NotCubic,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(degree(v)));
    }
}

CubicGraph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        list.push_back({static_cast<EdgeId>(i), edges[i].first, edges[i].second});
    return CubicGraph(Multigraph(n, std::move(list)));
}

namespace {

std::vector<char> membership(const Multigraph& g, std::span<const VertexId> S) {
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : S) {
        if (v >= g.vertex_count()) throw Error(ErrorCode::BadParameters, "vertex out of range");
        in[v] = 1;
    }
    return in;
}

}  // namespace

Contraction contract(const Multigraph& g, std::span<const VertexId> S) {
    const auto in = membership(g, S);
    Contraction out;
    out.vertex_map.resize(g.vertex_count());
    VertexId next = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!in[v]) out.vertex_map[v] = next++;
    out.merged = next;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (in[v]) out.vertex_map[v] = out.merged;

    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        if (in[e.u] && in[e.v]) continue;
        kept.push_back({e.id, out.vertex_map[e.u], out.vertex_map[e.v]});
    }
    out.graph = Multigraph(next + 1, std::move(kept));
    return out;
}

std::vector<EdgeId> delta(const Multigraph& g, std::span<const VertexId> S) {
    const auto in = membership(g, S);
    std::vector<EdgeId> out;
    for (const Edge& e : g.edges())
        if (in[e.u] != in[e.v]) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const Multigraph& g) {
    return g.vertex_count() == 0 || detail::connected_without(g, {});
}

bool edge_connectivity_at_least(const Multigraph& g, int k) {
    if (k <= 0) return true;
    if (g.vertex_count() <= 1) return true;
    if (!is_connected(g)) return false;
    if (k == 1) return true;
    if (k >= 4) return edge_connectivity_by_flow(g) >= k;

    const auto dfs = detail::spanning_dfs(g, 0);
    const auto labels = detail::cut_space_labels(g, dfs, 0x3ecc0ffeeULL);
    const auto m = static_cast<std::uint32_t>(g.edge_count());

    // A bridge always has label zero; a non-bridge is zero only by bad luck,
    // which the BFS rules out.
    for (std::uint32_t s = 0; s < m; ++s)
        if (labels[s].zero() && !detail::connected_without(g, {s})) return false;
    if (k == 2) return true;

    std::vector<std::uint32_t> by_label(m);
    for (std::uint32_t s = 0; s < m; ++s) by_label[s] = s;
    std::sort(by_label.begin(), by_label.end(), [&](std::uint32_t a, std::uint32_t b) {
        return labels[a] < labels[b] || (labels[a] == labels[b] && a < b);
    });
    for (std::uint32_t i = 0; i + 1 < m; ++i) {
        const auto a = by_label[i], b = by_label[i + 1];
        if (labels[a] == labels[b] && !detail::connected_without(g, {a, b})) return false;
    }
    return true;
}

int max_flow_between(const Multigraph& g, std::span<const VertexId> sources,
                     std::span<const VertexId> sinks, int cap, std::vector<char>* sink_side) {
    const std::size_t n = g.vertex_count();
    // role: 1 source, 2 sink
    std::vector<char> role(n, 0);
    for (VertexId s : sources) role[s] = 1;
    for (VertexId t : sinks) {
        if (role[t] == 1) throw Error(ErrorCode::BadParameters, "source and sink sets overlap");
        role[t] = 2;
    }
    // flow[slot] > 0 means one unit travels u -> v.
    std::vector<int> flow(g.edge_count(), 0);
    auto residual = [&](std::uint32_t slot, VertexId from) {
        const Edge& e = g.edge_at(slot);
        return from == e.u ? 1 - flow[slot] : 1 + flow[slot];
    };

    int value = 0;
    std::vector<std::uint32_t> via(n);
    std::vector<char> seen(n);
    std::deque<VertexId> queue;
    while (value < cap) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.clear();
        for (VertexId s : sources) {
            seen[s] = 1;
            queue.push_back(s);
        }
        VertexId reached = static_cast<VertexId>(n);
        while (!queue.empty() && reached == n) {
            const VertexId x = queue.front();
            queue.pop_front();
            for (std::uint32_t slot : g.incident(x)) {
                const VertexId y = g.other_end(slot, x);
                if (seen[y] || residual(slot, x) <= 0) continue;
                seen[y] = 1;
                via[y] = slot;
                if (role[y] == 2) {
                    reached = y;
                    break;
                }
                queue.push_back(y);
            }
        }
        if (reached == n) break;
        for (VertexId y = reached; role[y] != 1;) {
            const std::uint32_t slot = via[y];
            const Edge& e = g.edge_at(slot);
            const VertexId x = e.u == y ? e.v : e.u;
            flow[slot] += (x == e.u) ? 1 : -1;
            y = x;
        }
        ++value;
    }

    if (sink_side && value < cap) {
        // Vertices that can still push into a sink form the smallest sink side.
        sink_side->assign(n, 0);
        queue.clear();
        for (VertexId t : sinks) {
            (*sink_side)[t] = 1;
            queue.push_back(t);
        }
        while (!queue.empty()) {
            const VertexId x = queue.front();
            queue.pop_front();
            for (std::uint32_t slot : g.incident(x)) {
                const VertexId w = g.other_end(slot, x);
                if ((*sink_side)[w] || residual(slot, w) <= 0) continue;
                (*sink_side)[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return value;
}

int edge_connectivity_by_flow(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    if (n <= 1) return 0;
    int best = static_cast<int>(g.degree(0));
    for (VertexId v = 0; v < n; ++v) best = std::min(best, static_cast<int>(g.degree(v)));
    const VertexId s[] = {0};
    for (VertexId t = 1; t < n && best > 0; ++t) {
        const VertexId ts[] = {t};
        best = std::min(best, max_flow_between(g, s, ts, best));
    }
    return best;
}

namespace detail {

SpanningDfs spanning_dfs(const Multigraph& g, VertexId root) {
    const std::size_t n = g.vertex_count();
    SpanningDfs t;
    t.root = root;
    t.parent.assign(n, kNone);
    t.parent_slot.assign(n, kNone);
    t.depth.assign(n, 0);
    t.pre.assign(n, kNone);
    t.size.assign(n, 1);
    t.back_lower.assign(g.edge_count(), kNone);
    t.back_upper.assign(g.edge_count(), kNone);
    t.order.reserve(n);

    std::vector<std::pair<VertexId, std::uint32_t>> stack;  // vertex, next incidence index
    t.pre[root] = 0;
    t.order.push_back(root);
    stack.push_back({root, 0});
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto inc = g.incident(v);
        if (next == inc.size()) {
            const VertexId done = v;
            stack.pop_back();
            if (!stack.empty()) t.size[stack.back().first] += t.size[done];
            continue;
        }
        const std::uint32_t slot = inc[next++];
        const VertexId w = g.other_end(slot, v);
        if (t.pre[w] == kNone) {
            t.parent[w] = v;
            t.parent_slot[w] = slot;
            t.depth[w] = t.depth[v] + 1;
            t.pre[w] = static_cast<std::uint32_t>(t.order.size());
            t.order.push_back(w);
            stack.push_back({w, 0});  // invalidates v/next; loop re-reads back()
        } else if (slot != t.parent_slot[v] && t.depth[w] < t.depth[v]) {
            t.back_lower[slot] = v;
            t.back_upper[slot] = w;
            t.back_slots.push_back(slot);
        }
    }
    t.spans = t.order.size() == n;
    return t;
}

std::vector<Label> cut_space_labels(const Multigraph& g, const SpanningDfs& t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Label> labels(g.edge_count());
    std::vector<Label> acc(g.vertex_count());
    for (std::uint32_t slot : t.back_slots) {
        Label l{rng(), rng()};
        labels[slot] = l;
        acc[t.back_lower[slot]] ^= l;
        acc[t.back_upper[slot]] ^= l;
    }
    for (std::size_t i = t.order.size(); i-- > 1;) {
        const VertexId v = t.order[i];
        labels[t.parent_slot[v]] = acc[v];
        acc[t.parent[v]] ^= acc[v];
    }
    return labels;
}

bool connected_without(const Multigraph& g, std::initializer_list<std::uint32_t> removed) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (std::uint32_t slot : g.incident(x)) {
            if (std::find(removed.begin(), removed.end(), slot) != removed.end()) continue;
            const VertexId y = g.other_end(slot, x);
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n;
}

}  // namespace detail
}  // namespace wsm
