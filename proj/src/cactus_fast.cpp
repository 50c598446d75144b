// Near-linear 3-edge-cut enumeration and cactus assembly.
//
// With a DFS tree rooted at vertex 0, every 3-edge cut falls into one of a
// few shapes, and in each shape two of the three edges can be found
// directly, so the third comes from a label lookup. Tree edge e_v is the edge
// above v, B(v) is the set of back edges jumping over it, and "high" refers
// to the back edge of B(v) landing deepest.
//
//   one tree edge e_v:     |B(v)| = 2, the other back edge is found by label
//   e_u, e_v, back edge b: either b is the high edge of B(v), or b is one of
//                          the back edges of B(u) with the smallest or
//                          largest preorder lower end
//   fork e_u, e_v, e_w:    v, w unrelated below u; each is the topmost vertex
//                          on its branch whose whole B() lands above u
//   chain e_u, e_v, e_w:   u above v above w; v and w share their high edge
//
// Every candidate is checked by labels, so a false candidate costs nothing
// but a lookup. The chain case is handled by testing all pairs inside each
// high-edge group, which is near-linear unless the groups are long.

#include <algorithm>
#include <unordered_map>

#include "detail/canonical.hpp"
#include "detail/cut_space.hpp"
#include "wsm/cut_model.hpp"
#include "wsm/disjoint_set.hpp"

namespace wsm {

namespace {

using detail::kNone;
using detail::Label;
using Triple = std::array<std::uint32_t, 3>;

constexpr std::uint64_t kLabelSeed = 0x3ecc0ffeeULL;

// Min segment tree over preorder positions with "first/last position in a
// range holding a value below d" queries.
class MinSegmentTree {
public:
    explicit MinSegmentTree(const std::vector<std::uint32_t>& values) {
        size_ = 1;
        while (size_ < values.size()) size_ <<= 1;
        tree_.assign(2 * size_, kNone);
        std::copy(values.begin(), values.end(), tree_.begin() + static_cast<std::ptrdiff_t>(size_));
        for (std::size_t i = size_; i-- > 1;) tree_[i] = std::min(tree_[2 * i], tree_[2 * i + 1]);
    }

    std::uint32_t first_below(std::uint32_t l, std::uint32_t r, std::uint32_t d) const {
        return search(1, 0, static_cast<std::uint32_t>(size_), l, r, d, false);
    }
    std::uint32_t last_below(std::uint32_t l, std::uint32_t r, std::uint32_t d) const {
        return search(1, 0, static_cast<std::uint32_t>(size_), l, r, d, true);
    }

private:
    std::uint32_t search(std::size_t node, std::uint32_t nl, std::uint32_t nr, std::uint32_t l, std::uint32_t r,
                         std::uint32_t d, bool from_right) const {
        if (nr <= l || r <= nl || tree_[node] >= d) return kNone;
        if (nr - nl == 1) return nl;
        const std::uint32_t mid = (nl + nr) / 2;
        if (from_right) {
            if (auto x = search(2 * node + 1, mid, nr, l, r, d, true); x != kNone) return x;
            return search(2 * node, nl, mid, l, r, d, true);
        }
        if (auto x = search(2 * node, nl, mid, l, r, d, false); x != kNone) return x;
        return search(2 * node + 1, mid, nr, l, r, d, false);
    }

    std::size_t size_ = 0;
    std::vector<std::uint32_t> tree_;
};

class CutSearch {
public:
    explicit CutSearch(const CubicGraph& g)
        : g_(g), n_(static_cast<std::uint32_t>(g.vertex_count())), t_(detail::spanning_dfs(g, 0)),
          label_(detail::cut_space_labels(g, t_, kLabelSeed)) {
        index_labels();
        count_cover();
        assign_high_edges();
        build_lifting();
    }

    const detail::SpanningDfs& tree() const { return t_; }

    std::vector<Triple> run() {
        one_tree_edge_and_high_pairs();
        low_end_pairs_and_forks();
        chains();
        std::sort(found_.begin(), found_.end());
        found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
        return std::move(found_);
    }

private:
    std::uint32_t up_slot(VertexId v, int i) const { return up_[2 * v + i]; }
    std::uint32_t upper_depth(std::uint32_t back_slot) const { return t_.depth[t_.back_upper[back_slot]]; }
    const Label& h(VertexId v) const { return label_[t_.parent_slot[v]]; }

    void index_labels() {
        tree_by_label_.reserve(n_);
        back_by_label_.reserve(t_.back_slots.size());
        for (VertexId v = 0; v < n_; ++v) {
            if (v == t_.root) continue;
            WSM_CHECK(tree_by_label_.emplace(h(v), v).second, "cut-space label collision");
        }
        for (std::uint32_t s : t_.back_slots) WSM_CHECK(back_by_label_.emplace(label_[s], s).second, "cut-space label collision");
    }

    void count_cover() {
        up_.assign(2 * static_cast<std::size_t>(n_), kNone);
        std::vector<std::int64_t> acc(n_, 0);
        for (std::uint32_t s : t_.back_slots) {
            const auto lo = t_.back_lower[s];
            (up_[2 * lo] == kNone ? up_[2 * lo] : up_[2 * lo + 1]) = s;
            acc[lo] += 1;
            acc[t_.back_upper[s]] -= 1;
        }
        cover_.assign(n_, 0);
        for (std::size_t i = n_; i-- > 1;) {
            const auto v = t_.order[i];
            cover_[v] = static_cast<std::uint32_t>(acc[v]);
            acc[t_.parent[v]] += acc[v];
        }
    }

    // high_edge[v]: the back edge of B(v) landing deepest (ties by slot).
    // Back edges are taken deepest-landing first and claim every unclaimed
    // vertex on their path; a skip structure jumps over claimed stretches.
    void assign_high_edges() {
        std::vector<std::uint32_t> order = t_.back_slots;
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            const auto da = upper_depth(a), db = upper_depth(b);
            return da != db ? da > db : a < b;
        });
        high_edge_.assign(n_, kNone);
        high_depth_.assign(n_, kNone);
        DisjointSet skip(n_);
        std::vector<std::uint32_t> top(n_);  // highest unclaimed vertex of a claimed run
        for (VertexId v = 0; v < n_; ++v) top[v] = v;
        for (std::uint32_t s : order) {
            const auto stop = upper_depth(s);
            VertexId x = top[skip.find(t_.back_lower[s])];
            while (t_.depth[x] > stop) {
                high_edge_[x] = s;
                high_depth_[x] = stop;
                const VertexId p = t_.parent[x];
                const VertexId next = top[skip.find(p)];
                top[skip.unite(x, p)] = next;
                x = next;
            }
        }
        for (VertexId v = 0; v < n_; ++v)
            WSM_CHECK(v == t_.root || high_edge_[v] != kNone, "tree edge not covered by any back edge");
    }

    void build_lifting() {
        levels_ = 1;
        while ((1u << levels_) < n_) ++levels_;
        anc_.assign(levels_, std::vector<std::uint32_t>(n_));
        min_high_.assign(levels_, std::vector<std::uint32_t>(n_));
        for (VertexId v = 0; v < n_; ++v) {
            anc_[0][v] = v == t_.root ? v : t_.parent[v];
            min_high_[0][v] = high_depth_[v];
        }
        for (std::uint32_t k = 1; k < levels_; ++k)
            for (VertexId v = 0; v < n_; ++v) {
                const auto mid = anc_[k - 1][v];
                anc_[k][v] = anc_[k - 1][mid];
                min_high_[k][v] = std::min(min_high_[k - 1][v], min_high_[k - 1][mid]);
            }
    }

    VertexId lift(VertexId v, std::uint32_t steps) const {
        for (std::uint32_t k = 0; steps; ++k, steps >>= 1)
            if (steps & 1) v = anc_[k][v];
        return v;
    }

    VertexId lca(VertexId a, VertexId b) const {
        if (t_.depth[a] < t_.depth[b]) std::swap(a, b);
        a = lift(a, t_.depth[a] - t_.depth[b]);
        if (a == b) return a;
        for (std::uint32_t k = levels_; k-- > 0;)
            if (anc_[k][a] != anc_[k][b]) {
                a = anc_[k][a];
                b = anc_[k][b];
            }
        return t_.parent[a];
    }

    // Smallest high depth among v and its len - 1 nearest ancestors.
    std::uint32_t path_min_high(VertexId v, std::uint32_t len) const {
        std::uint32_t best = kNone;
        for (std::uint32_t k = 0; len; ++k, len >>= 1)
            if (len & 1) {
                best = std::min(best, min_high_[k][v]);
                v = anc_[k][v];
            }
        return best;
    }

    // Topmost vertex x strictly below y on the path to `from` whose B(x)
    // lands entirely above depth d, or kNone.
    VertexId topmost_landing_above(VertexId from, VertexId y, std::uint32_t d) const {
        const std::uint32_t base = t_.depth[y];
        const std::uint32_t len = t_.depth[from] - base;
        if (path_min_high(from, len) >= d) return kNone;
        std::uint32_t lo = 1, hi = len;
        while (lo < hi) {
            const std::uint32_t k = (lo + hi) / 2;
            const VertexId z = lift(from, len - k);
            if (path_min_high(z, k) < d) hi = k;
            else lo = k + 1;
        }
        return lift(from, len - lo);
    }

    void add(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        Triple tr{a, b, c};
        std::sort(tr.begin(), tr.end());
        if (tr[0] != tr[1] && tr[1] != tr[2]) found_.push_back(tr);
    }

    VertexId tree_lookup(const Label& l) const {
        auto it = tree_by_label_.find(l);
        return it == tree_by_label_.end() ? kNone : it->second;
    }
    std::uint32_t back_lookup(const Label& l) const {
        auto it = back_by_label_.find(l);
        return it == back_by_label_.end() ? kNone : it->second;
    }

    void one_tree_edge_and_high_pairs() {
        for (VertexId v = 0; v < n_; ++v) {
            if (v == t_.root) continue;
            const auto b = high_edge_[v];
            const Label rest = h(v) ^ label_[b];
            if (cover_[v] == 2)
                if (auto b2 = back_lookup(rest); b2 != kNone) add(t_.parent_slot[v], b, b2);
            if (auto u = tree_lookup(rest); u != kNone) add(t_.parent_slot[u], t_.parent_slot[v], b);
        }
    }

    void low_end_pairs_and_forks() {
        std::vector<std::uint32_t> lowest(n_, kNone);
        for (std::uint32_t s : t_.back_slots) {
            auto& slot = lowest[t_.pre[t_.back_lower[s]]];
            slot = std::min(slot, upper_depth(s));
        }
        const MinSegmentTree seg(lowest);
        for (VertexId u = 0; u < n_; ++u) {
            if (u == t_.root) continue;
            const auto l = t_.pre[u], r = t_.pre[u] + t_.size[u];
            const auto du = t_.depth[u];
            const VertexId p = t_.order[seg.first_below(l, r, du)];
            const VertexId q = t_.order[seg.last_below(l, r, du)];

            for (VertexId x : {p, q}) {
                for (int i = 0; i < 2; ++i) {
                    const auto b = up_slot(x, i);
                    if (b == kNone || upper_depth(b) >= du) continue;
                    if (auto v = tree_lookup(h(u) ^ label_[b]); v != kNone)
                        add(t_.parent_slot[u], t_.parent_slot[v], b);
                }
                if (p == q) break;
            }

            const VertexId y = lca(p, q);
            if (y == p || y == q) continue;
            const VertexId v = topmost_landing_above(p, y, du);
            const VertexId w = topmost_landing_above(q, y, du);
            if (v != kNone && w != kNone && h(u) == (h(v) ^ h(w)))
                add(t_.parent_slot[u], t_.parent_slot[v], t_.parent_slot[w]);
        }
    }

    void chains() {
        const std::size_t m = g_.edge_count();
        std::vector<std::uint32_t> start(m + 1, 0);
        for (VertexId v = 0; v < n_; ++v)
            if (v != t_.root) ++start[high_edge_[v] + 1];
        for (std::size_t s = 0; s < m; ++s) start[s + 1] += start[s];
        std::vector<std::uint32_t> group(start.back());
        auto fill = start;
        // Preorder visits every group top-down, so each group comes out
        // sorted by depth.
        for (VertexId v : t_.order)
            if (v != t_.root) group[fill[high_edge_[v]]++] = v;
        for (std::size_t s = 0; s < m; ++s) {
            for (auto i = start[s]; i < start[s + 1]; ++i)
                for (auto j = i + 1; j < start[s + 1]; ++j) {
                    const VertexId v = group[i], w = group[j];
                    if (auto u = tree_lookup(h(v) ^ h(w)); u != kNone)
                        add(t_.parent_slot[u], t_.parent_slot[v], t_.parent_slot[w]);
                }
        }
    }

    const CubicGraph& g_;
    std::uint32_t n_;
    detail::SpanningDfs t_;
    std::vector<Label> label_;
    std::unordered_map<Label, VertexId, detail::LabelHash> tree_by_label_;
    std::unordered_map<Label, std::uint32_t, detail::LabelHash> back_by_label_;
    std::vector<std::uint32_t> up_;  // two slots per vertex
    std::vector<std::uint32_t> cover_;
    std::vector<std::uint32_t> high_edge_, high_depth_;
    std::uint32_t levels_ = 1;
    std::vector<std::vector<std::uint32_t>> anc_, min_high_;
    std::vector<Triple> found_;
};

void require_three_edge_connected(const CubicGraph& g) {
    if (!edge_connectivity_at_least(g, 3))
        throw Error(ErrorCode::NotThreeEdgeConnected, "graph is not 3-edge-connected");
}

// The shore of a cut that avoids the DFS root, described by the vertices
// whose parent edge is cut: x is inside iff an odd number of them are
// ancestors of x (or x itself).
struct Shore {
    Triple slots{};
    std::array<VertexId, 3> tops{};
    std::uint8_t tree_edges = 0;
    bool all_but_root = false;
    std::uint32_t size = 0;
};

bool contains(const detail::SpanningDfs& t, const Shore& s, VertexId x) {
    if (s.all_but_root) return x != t.root;
    int parity = 0;
    for (int i = 0; i < s.tree_edges; ++i) parity ^= t.is_ancestor(s.tops[i], x) ? 1 : 0;
    return parity != 0;
}

}  // namespace

std::vector<std::array<EdgeId, 3>> enumerate_3cuts(const CubicGraph& g) {
    require_three_edge_connected(g);
    std::vector<std::array<EdgeId, 3>> out;
    if (g.vertex_count() == 2) {
        out.push_back({g.edge_at(0).id, g.edge_at(1).id, g.edge_at(2).id});
    } else {
        CutSearch search(g);
        for (const auto& tr : search.run()) out.push_back({g.edge_at(tr[0]).id, g.edge_at(tr[1]).id, g.edge_at(tr[2]).id});
    }
    for (auto& tr : out) std::sort(tr.begin(), tr.end());
    std::sort(out.begin(), out.end());
    return out;
}

CactusModel build_cactus(const CubicGraph& g) {
    require_three_edge_connected(g);
    const auto n = static_cast<std::uint32_t>(g.vertex_count());
    if (n == 2) return CactusModel(2, {{0, 1}}, {0, 1}, 0);

    CutSearch search(g);
    const auto triples = search.run();
    const auto& t = search.tree();

    std::vector<char> star_seen(n, 0);
    std::vector<Shore> shores;
    for (const auto& tr : triples) {
        const Edge& first = g.edge_at(tr[0]);
        bool trivial = false;
        for (VertexId c : {first.u, first.v}) {
            bool all = true;
            for (auto s : tr) all &= g.edge_at(s).u == c || g.edge_at(s).v == c;
            if (all) {
                star_seen[c] = 1;
                trivial = true;
                break;
            }
        }
        if (trivial) continue;

        Shore shore;
        shore.slots = tr;
        for (auto s : tr)
            if (t.is_tree_slot(s)) {
                const Edge& e = g.edge_at(s);
                shore.tops[shore.tree_edges++] = t.parent_slot[e.u] == s ? e.u : e.v;
            }
        // Inclusion-exclusion over the nested subtrees.
        std::int64_t size = 0;
        for (int i = 0; i < shore.tree_edges; ++i) {
            int above = 0;
            for (int j = 0; j < shore.tree_edges; ++j)
                if (j != i && t.is_ancestor(shore.tops[j], shore.tops[i])) ++above;
            size += (above % 2 ? -1 : 1) * static_cast<std::int64_t>(t.size[shore.tops[i]]);
        }
        WSM_CHECK(size >= 2 && size <= static_cast<std::int64_t>(n) - 2, "nontrivial cut with a one-vertex shore");
        shore.size = static_cast<std::uint32_t>(size);
        shores.push_back(shore);
    }
    for (VertexId v = 0; v < n; ++v) WSM_CHECK(star_seen[v], "trivial cut of a vertex was not enumerated");

    std::stable_sort(shores.begin(), shores.end(), [](const Shore& a, const Shore& b) { return a.size < b.size; });
    {
        Shore rest;
        const auto star = g.incident(t.root);
        rest.slots = {star[0], star[1], star[2]};
        rest.all_but_root = true;
        rest.size = n - 1;
        shores.push_back(rest);
    }

    // Assemble bottom-up. Each shore's children are the maximal smaller
    // shores (or single vertices) inside it; they are found by walking from
    // the shore's boundary across the cut edges of the pieces already built.
    const std::size_t node_count = n + shores.size();
    std::vector<std::pair<NodeId, NodeId>> raw;
    raw.reserve(node_count - 1);
    DisjointSet ds(n);
    std::vector<NodeId> top(n);
    for (VertexId v = 0; v < n; ++v) top[v] = v;
    std::vector<std::uint32_t> stamp(node_count, kNone);
    std::vector<std::pair<NodeId, VertexId>> kids;

    auto node_size = [&](NodeId x) { return x < n ? 1u : shores[x - n].size; };

    for (std::uint32_t i = 0; i < shores.size(); ++i) {
        const Shore& S = shores[i];
        const NodeId node = n + i;
        kids.clear();
        auto visit = [&](VertexId x) {
            const NodeId c = top[ds.find(x)];
            if (stamp[c] == i) return;
            stamp[c] = i;
            kids.push_back({c, x});
        };
        for (auto s : S.slots) {
            const Edge& e = g.edge_at(s);
            visit(contains(t, S, e.u) ? e.u : e.v);
        }
        for (std::size_t head = 0; head < kids.size(); ++head) {
            const NodeId c = kids[head].first;
            const auto walk = [&](std::uint32_t s) {
                const Edge& e = g.edge_at(s);
                VertexId out;
                if (c < n) out = e.u == c ? e.v : e.u;
                else out = contains(t, shores[c - n], e.u) ? e.v : e.u;
                if (contains(t, S, out)) visit(out);
            };
            if (c < n)
                for (auto s : g.incident(c)) walk(s);
            else
                for (auto s : shores[c - n].slots) walk(s);
        }
        WSM_CHECK(kids.size() >= 2, "cut shore with a single child");
        std::uint32_t covered = 0;
        for (auto [c, rep] : kids) {
            raw.push_back({node, c});
            covered += node_size(c);
            ds.unite(rep, kids[0].second);
        }
        WSM_CHECK(covered == S.size, "children do not partition the cut shore");
        top[ds.find(kids[0].second)] = node;
    }
    raw.push_back({static_cast<NodeId>(node_count - 1), t.root});

    std::vector<NodeId> identity(n);
    for (VertexId v = 0; v < n; ++v) identity[v] = v;
    return detail::canonical_model(node_count, raw, identity);
}

}  // namespace wsm
