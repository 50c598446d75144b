#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "wsm/generators.hpp"

namespace oracle {

using namespace wsm;

namespace {

bool connected_without(const Multigraph& g, const std::vector<std::size_t>& removed) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto s : g.incident(x)) {
            if (std::find(removed.begin(), removed.end(), s) != removed.end()) continue;
            auto y = g.other_end(s, x);
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n;
}

}  // namespace

int edge_connectivity_upto3(const Multigraph& g) {
    const std::size_t m = g.edge_count();
    if (!connected_without(g, {})) return 0;
    for (std::size_t a = 0; a < m; ++a)
        if (!connected_without(g, {a})) return 1;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (!connected_without(g, {a, b})) return 2;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c)
                if (!connected_without(g, {a, b, c})) return 3;
    return 4;
}

std::set<Triple> three_cuts(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    std::set<Triple> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) - 1; ++mask) {
        std::vector<EdgeId> cut;
        for (const Edge& e : g.edges())
            if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) cut.push_back(e.id);
        if (cut.size() != 3) continue;
        std::sort(cut.begin(), cut.end());
        out.insert({cut[0], cut[1], cut[2]});
    }
    return out;
}

namespace {

void extend(const Multigraph& g, std::vector<char>& covered, Matching& cur, std::vector<Matching>& out) {
    const auto it = std::find(covered.begin(), covered.end(), 0);
    if (it == covered.end()) {
        Matching m = cur;
        std::sort(m.begin(), m.end());
        out.push_back(m);
        return;
    }
    const auto v = static_cast<VertexId>(it - covered.begin());
    for (auto s : g.incident(v)) {
        const auto w = g.other_end(s, v);
        if (covered[w]) continue;
        covered[v] = covered[w] = 1;
        cur.push_back(g.edge_at(s).id);
        extend(g, covered, cur, out);
        cur.pop_back();
        covered[v] = covered[w] = 0;
    }
}

}  // namespace

std::vector<Matching> perfect_matchings(const Multigraph& g) {
    std::vector<char> covered(g.vertex_count(), 0);
    Matching cur;
    std::vector<Matching> out;
    extend(g, covered, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool well_spread(const Multigraph& g, const Matching& m) {
    for (const auto& cut : three_cuts(g)) {
        int hits = 0;
        for (auto e : cut) hits += std::binary_search(m.begin(), m.end(), e) ? 1 : 0;
        if (hits != 1) return false;
    }
    return true;
}

std::size_t intersection_size(const Matching& a, const Matching& b) {
    std::size_t k = 0;
    for (auto e : a) k += std::binary_search(b.begin(), b.end(), e) ? 1 : 0;
    return k;
}

CubicGraph corpus_graph(std::mt19937_64& rng, std::size_t max_n) {
    auto pick_piece = [&]() -> CubicGraph {
        switch (uniform_below(rng, 7)) {
            case 0: return k4();
            case 1: return prism(3);
            case 2: return petersen();
            case 3: return k33();
            case 4: return prism(4);
            case 5: return prism(5);
            default: return random_cubic(6 + 2 * uniform_below(rng, 3), rng());
        }
    };
    CubicGraph g = pick_piece();
    while (g.vertex_count() > max_n) g = k4();
    for (;;) {
        CubicGraph h = pick_piece();
        if (g.vertex_count() + h.vertex_count() - 2 > max_n) break;
        std::array<int, 3> perm{0, 1, 2};
        for (int k = 2; k > 0; --k) std::swap(perm[k], perm[uniform_below(rng, k + 1)]);
        g = three_sum(g, static_cast<VertexId>(uniform_below(rng, g.vertex_count())), h,
                      static_cast<VertexId>(uniform_below(rng, h.vertex_count())), perm);
        if (uniform_below(rng, 4) == 0) break;
    }
    return g;
}

CubicGraph relabel(const CubicGraph& g, std::mt19937_64& rng, std::vector<EdgeId>* edge_map) {
    const std::size_t n = g.vertex_count(), m = g.edge_count();
    std::vector<VertexId> vp(n);
    std::iota(vp.begin(), vp.end(), 0u);
    for (std::size_t k = n; k > 1; --k) std::swap(vp[k - 1], vp[uniform_below(rng, k)]);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = m; k > 1; --k) std::swap(order[k - 1], order[uniform_below(rng, k)]);
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (edge_map) edge_map->assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = g.edge_at(order[i]);
        edges.push_back({vp[e.u], vp[e.v]});
        if (edge_map) (*edge_map)[e.id] = static_cast<EdgeId>(i);
    }
    return build_graph(n, edges);
}

}  // namespace oracle
