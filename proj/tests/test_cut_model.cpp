#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "wsm/cut_model.hpp"
#include "wsm/generators.hpp"

using namespace wsm;

namespace {

std::set<oracle::Triple> as_set(const std::vector<std::array<EdgeId, 3>>& v) { return {v.begin(), v.end()}; }

std::set<oracle::Triple> model_cuts(const CactusModel& m, const CubicGraph& g) {
    std::set<oracle::Triple> out;
    for (std::size_t i = 0; i < m.edges().size(); ++i) {
        auto cut = tree_edge_cut(m, g, i);
        REQUIRE(cut.edges.size() == 3);
        out.insert({cut.edges[0], cut.edges[1], cut.edges[2]});
    }
    return out;
}

std::size_t count_kind(const CactusModel& m, NodeKind k) {
    std::size_t c = 0;
    for (NodeId x = 0; x < m.node_count(); ++x) c += m.kind(x) == k;
    return c;
}

}  // namespace

TEST_CASE("brute force agrees with the plain subset oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        const auto g = oracle::corpus_graph(rng, 14);
        std::set<oracle::Triple> fast;
        for (const auto& c : enumerate_3cuts_bruteforce(g)) {
            REQUIRE(c.edges == delta(g, c.side));
            CHECK(std::find(c.side.begin(), c.side.end(), 0u) == c.side.end());
            fast.insert({c.edges[0], c.edges[1], c.edges[2]});
        }
        CHECK(fast == oracle::three_cuts(g));
    }
}

TEST_CASE("brute force refuses large or disconnected graphs") {
    CHECK_THROWS_AS(enumerate_3cuts_bruteforce(random_cubic(24, 1)), Error);
    std::vector<std::pair<VertexId, VertexId>> two_k4;
    for (VertexId base : {0u, 4u})
        for (VertexId a = 0; a < 4; ++a)
            for (VertexId b = a + 1; b < 4; ++b) two_k4.push_back({base + a, base + b});
    try {
        enumerate_3cuts_bruteforce(build_graph(8, two_k4));
        FAIL("expected Disconnected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Disconnected);
    }
}

TEST_CASE("label enumeration finds exactly the brute-force cuts") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const auto g0 = oracle::corpus_graph(rng, 22);
        // Relabelling changes the DFS tree, which exercises every case shape.
        const auto g = oracle::relabel(g0, rng, nullptr);
        std::set<oracle::Triple> truth;
        for (const auto& c : enumerate_3cuts_bruteforce(g)) truth.insert({c.edges[0], c.edges[1], c.edges[2]});
        const auto got = as_set(enumerate_3cuts(g));
        REQUIRE_MESSAGE(got == truth, "graph " << i << " n=" << g.vertex_count());
    }
}

TEST_CASE("fast and recursive cactus builds agree") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 60; ++i) {
        const auto g = oracle::relabel(oracle::corpus_graph(rng, 40), rng, nullptr);
        const auto fast = build_cactus(g);
        const auto slow = build_cactus_recursive(g);
        REQUIRE(fast == slow);
    }
}

TEST_CASE("cactus is exactly the brute-force cut family") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto g = oracle::relabel(oracle::corpus_graph(rng, 20), rng, nullptr);
        const auto m = build_cactus(g);
        const auto report = validate_cactus(m, g);
        REQUIRE_MESSAGE(report.ok, report.failure);
        CHECK(model_cuts(m, g) == oracle::three_cuts(g));
        CHECK(m.edges().size() <= 2 * g.vertex_count() - 3);
    }
}

TEST_CASE("prism cactus: two hubs of degree 4 joined by the rung cut") {
    const auto g = prism(3);
    const auto m = build_cactus(g);
    CHECK(m.node_count() == 8);
    CHECK(m.edges().size() == 7);
    CHECK(count_kind(m, NodeKind::Leaf) == 6);
    CHECK(m.nontrivial_cut_count() == 1);
    std::size_t hubs = 0;
    for (NodeId x = 0; x < m.node_count(); ++x)
        if (m.kind(x) == NodeKind::Empty) {
            CHECK(m.neighbours(x).size() == 4);
            ++hubs;
        }
    CHECK(hubs == 2);
    bool rung_cut = false;
    for (std::size_t i = 0; i < m.edges().size(); ++i) {
        auto cut = tree_edge_cut(m, g, i);
        if (cut.side.size() == 3) {
            CHECK(cut.edges == std::vector<EdgeId>{6, 7, 8});
            rung_cut = true;
        }
    }
    CHECK(rung_cut);
}

TEST_CASE("stars: K4, K3,3 and Petersen have no nontrivial cuts") {
    for (const auto& g : {k4(), k33(), petersen()}) {
        const auto m = build_cactus(g);
        CHECK(m.node_count() == g.vertex_count() + 1);
        CHECK(m.edges().size() == g.vertex_count());
        CHECK(m.neighbours(m.root()).size() == g.vertex_count());
        CHECK(validate_cactus(m, g).ok);
    }
}

TEST_CASE("truncated K4 has four nontrivial cuts around a central node") {
    const auto g = truncate(k4());
    const auto m = build_cactus(g);
    CHECK(m.edges().size() == 16);
    CHECK(m.nontrivial_cut_count() == 4);
    CHECK(count_kind(m, NodeKind::Empty) == 5);
    std::size_t central = 0;
    for (NodeId x = 0; x < m.node_count(); ++x)
        if (m.kind(x) == NodeKind::Empty && m.neighbours(x).size() == 4) {
            bool all_empty = true;
            for (auto y : m.neighbours(x)) all_empty &= m.kind(y) == NodeKind::Empty;
            central += all_empty;
        }
    CHECK(central == 1);
}

TEST_CASE("theta graph has a single-edge cactus") {
    std::vector<std::pair<VertexId, VertexId>> e{{0, 1}, {0, 1}, {0, 1}};
    const auto g = build_graph(2, e);
    const auto m = build_cactus(g);
    CHECK(m.edges().size() == 1);
    CHECK(validate_cactus(m, g).ok);
    CHECK(build_cactus_recursive(g) == m);
}

TEST_CASE("validation catches broken models") {
    const auto g = prism(3);
    SUBCASE("missing middle edge") {
        // Merge the two hubs: a star over all six vertices.
        std::vector<std::pair<NodeId, NodeId>> e;
        for (NodeId v = 0; v < 6; ++v) e.push_back({v, 6});
        const CactusModel star(7, e, {0, 1, 2, 3, 4, 5}, 6);
        const auto r = validate_cactus(star, g);
        CHECK_FALSE(r.ok);
        CHECK(r.failure.find("not represented") != std::string::npos);
    }
    SUBCASE("tree edge that is not a 3-cut") {
        // Hubs holding the wrong triples: {0,1,3} and {2,4,5}.
        std::vector<std::pair<NodeId, NodeId>> e{{0, 6}, {1, 6}, {3, 6}, {2, 7}, {4, 7}, {5, 7}, {6, 7}};
        const CactusModel wrong(8, e, {0, 1, 2, 3, 4, 5}, 6);
        const auto r = validate_cactus(wrong, g);
        CHECK_FALSE(r.ok);
        CHECK(r.failure.find("cut of size") != std::string::npos);
    }
    SUBCASE("too many tree edges") {
        // Subdividing the rung edge three times gives 2n-2 edges.
        auto m = build_cactus(g);
        std::vector<std::pair<NodeId, NodeId>> e;
        for (auto [a, b] : m.edges()) {
            if (a >= 6 && b >= 6) {
                e.insert(e.end(), {{a, 8}, {8, 9}, {9, 10}, {10, b}});
            } else {
                e.push_back({a, b});
            }
        }
        const CactusModel padded(11, e, m.phi(), m.root());
        CHECK(padded.edges().size() == 2 * 6 - 2);
        const auto r = validate_cactus(padded, g);
        CHECK_FALSE(r.ok);
        CHECK(r.failure.find("2n-3") != std::string::npos);
    }
    SUBCASE("phi not injective") {
        auto m = build_cactus(g);
        auto phi = m.phi();
        phi[1] = phi[0];
        CHECK_FALSE(validate_cactus(CactusModel(m.node_count(), m.edges(), phi, m.root()), g).ok);
    }
}

TEST_CASE("non 3-edge-connected inputs are rejected") {
    // Two K4-minus-an-edge blocks joined by two edges.
    std::vector<std::pair<VertexId, VertexId>> e{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                                                 {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7},
                                                 {0, 4}, {3, 7}};
    const auto g = build_graph(8, e);
    CHECK(oracle::edge_connectivity_upto3(g) == 2);
    try {
        build_cactus(g);
        FAIL("expected NotThreeEdgeConnected");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::NotThreeEdgeConnected);
    }
}

TEST_CASE("size bound holds on large random graphs") {
    for (std::size_t n : {1000u, 10000u}) {
        const auto g = random_cubic(n, n + 3);
        const auto m = build_cactus(g);
        CHECK(m.edges().size() <= 2 * n - 3);
        CHECK(validate_cactus(m, g, Validation::Structural).ok);
    }
}

TEST_CASE("exports") {
    const auto m = build_cactus(prism(3));
    const auto json = to_json(m);
    CHECK(json.find("\"nontrivial_cuts\": 1") != std::string::npos);
    const auto dot = to_dot(m);
    CHECK(dot.rfind("graph cactus {", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '-') == 2 * 7);
}
