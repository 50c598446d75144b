#include "wsm/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace wsm {

namespace {

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

CubicGraph from_pairs(std::size_t n, const Pairs& edges) { return build_graph(n, edges); }

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection sampling on the top of the range keeps this unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

CubicGraph k4() { return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

CubicGraph k33() {
    Pairs e;
    for (VertexId a = 0; a < 3; ++a)
        for (VertexId b = 3; b < 6; ++b) e.push_back({a, b});
    return from_pairs(6, e);
}

CubicGraph petersen() {
    Pairs e;
    for (VertexId i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
    for (VertexId i = 0; i < 5; ++i) e.push_back({5 + i, 5 + (i + 2) % 5});
    for (VertexId i = 0; i < 5; ++i) e.push_back({i, 5 + i});
    return from_pairs(10, e);
}

CubicGraph prism(std::size_t k) {
    if (k < 3) throw Error(ErrorCode::BadParameters, "prism needs k >= 3");
    Pairs e;
    const auto K = static_cast<VertexId>(k);
    for (VertexId i = 0; i < K; ++i) e.push_back({i, (i + 1) % K});
    for (VertexId i = 0; i < K; ++i) e.push_back({K + i, K + (i + 1) % K});
    for (VertexId i = 0; i < K; ++i) e.push_back({i, K + i});
    return from_pairs(2 * k, e);
}

CubicGraph truncate(const CubicGraph& g) {
    Pairs e;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        e.push_back({3 * v, 3 * v + 1});
        e.push_back({3 * v, 3 * v + 2});
        e.push_back({3 * v + 1, 3 * v + 2});
    }
    auto port = [&](VertexId v, std::uint32_t slot) {
        const auto inc = g.incident(v);
        return static_cast<VertexId>(std::find(inc.begin(), inc.end(), slot) - inc.begin());
    };
    for (std::uint32_t s = 0; s < g.edge_count(); ++s) {
        const Edge& ed = g.edge_at(s);
        e.push_back({3 * ed.u + port(ed.u, s), 3 * ed.v + port(ed.v, s)});
    }
    return from_pairs(3 * g.vertex_count(), e);
}

CubicGraph random_cubic(std::size_t n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw Error(ErrorCode::BadParameters, "random graphs need an even n >= 4, got " + std::to_string(n));
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Pairs e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        e.reserve(3 * n / 2);
        VertexId next = 4;
        while (next < n) {
            const auto i = uniform_below(rng, e.size());
            auto j = uniform_below(rng, e.size() - 1);
            if (j >= i) ++j;
            const VertexId x = next++, y = next++;
            const auto [a, b] = e[i];
            const auto [c, d] = e[j];
            e[i] = {a, x};
            e[j] = {c, y};
            e.push_back({x, b});
            e.push_back({y, d});
            e.push_back({x, y});
        }
        std::vector<VertexId> relabel(n);
        std::iota(relabel.begin(), relabel.end(), 0u);
        for (std::size_t k = n; k > 1; --k) std::swap(relabel[k - 1], relabel[uniform_below(rng, k)]);
        for (std::size_t k = e.size(); k > 1; --k) std::swap(e[k - 1], e[uniform_below(rng, k)]);
        for (auto& [u, v] : e) {
            u = relabel[u];
            v = relabel[v];
        }
        auto g = from_pairs(n, e);
        // Insertion between distinct edges preserves 3-edge-connectivity, so
        // this retry is a guard rather than an expected path.
        if (edge_connectivity_at_least(g, 3)) return g;
    }
    throw Error(ErrorCode::InternalInvariantViolation, "could not generate a 3-edge-connected graph");
}

CubicGraph three_sum(const CubicGraph& g, VertexId x, const CubicGraph& h, VertexId y,
                     const std::array<int, 3>& perm) {
    const auto ng = static_cast<VertexId>(g.vertex_count());
    auto gmap = [&](VertexId v) { return v < x ? v : v - 1; };
    auto hmap = [&](VertexId v) { return ng - 1 + (v < y ? v : v - 1); };
    Pairs e;
    for (const Edge& ed : g.edges())
        if (ed.u != x && ed.v != x) e.push_back({gmap(ed.u), gmap(ed.v)});
    for (const Edge& ed : h.edges())
        if (ed.u != y && ed.v != y) e.push_back({hmap(ed.u), hmap(ed.v)});
    const auto gx = g.incident(x);
    const auto hy = h.incident(y);
    for (int i = 0; i < 3; ++i)
        e.push_back({gmap(g.other_end(gx[i], x)), hmap(h.other_end(hy[perm[i]], y))});
    return from_pairs(g.vertex_count() + h.vertex_count() - 2, e);
}

}  // namespace wsm
