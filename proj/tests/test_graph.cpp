#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wsm/generators.hpp"
#include "wsm/graph.hpp"

using namespace wsm;

namespace {

ErrorCode build_error(std::size_t n, std::vector<std::pair<VertexId, VertexId>> e) {
    try {
        build_graph(n, e);
    } catch (const Error& err) {
        return err.code();
    }
    FAIL("expected an error");
    return ErrorCode::InternalInvariantViolation;
}

}  // namespace

TEST_CASE("build_graph keeps input positions as ids") {
    const auto g = k4();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.edge(4).u == 1);
    CHECK(g.edge(4).v == 3);
    for (VertexId v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("build_graph rejects invalid input") {
    CHECK(build_error(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}) == ErrorCode::NotCubic);
    CHECK(build_error(2, {{0, 0}, {0, 1}, {1, 1}}) == ErrorCode::LoopFound);
    // Three vertices of degree 3 would need 4.5 edges; odd order is checked
    // before degrees.
    CHECK(build_error(3, {{0, 1}, {1, 2}, {0, 2}}) == ErrorCode::OddOrder);
    CHECK_THROWS_AS(k4().edge(6), Error);
}

TEST_CASE("contract keeps parallel edges and ids, drops inner edges") {
    const auto g = prism(3);
    const VertexId S[] = {0, 1, 2};
    const auto c = contract(g, S);
    CHECK(c.graph.vertex_count() == 4);
    CHECK(c.merged == 3);
    CHECK(c.graph.edge_count() == 6);  // triangle 0-1-2 removed
    CHECK(c.graph.degree(c.merged) == 3);
    for (EdgeId rung : {6u, 7u, 8u}) CHECK(c.graph.has_edge(rung));
    CHECK_FALSE(c.graph.has_edge(0));
    CHECK(c.vertex_map[4] == 1);

    // Contracting two adjacent vertices of K4 leaves a double edge.
    const VertexId pair[] = {0, 1};
    const auto d = contract(k4(), pair);
    CHECK(d.graph.vertex_count() == 3);
    CHECK(d.graph.degree(d.merged) == 4);
}

TEST_CASE("delta is sorted and symmetric") {
    const auto g = petersen();
    const VertexId S[] = {0, 1, 2, 3, 4};
    const VertexId T[] = {5, 6, 7, 8, 9};
    CHECK(delta(g, S) == std::vector<EdgeId>{10, 11, 12, 13, 14});
    CHECK(delta(g, S) == delta(g, T));
}

TEST_CASE("edge connectivity agrees with deletion and flow oracles") {
    std::mt19937_64 rng(4);
    int seen[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 200; ++i) {
        // Random cubic multigraphs from random pairings: all connectivities
        // from 0 to 3 show up.
        const std::size_t n = 4 + 2 * uniform_below(rng, 5);
        std::vector<VertexId> stubs;
        for (VertexId v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);
        for (std::size_t k = stubs.size(); k > 1; --k) std::swap(stubs[k - 1], stubs[uniform_below(rng, k)]);
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < stubs.size(); k += 2)
            if (stubs[k] != stubs[k + 1])
                edges.push_back({static_cast<EdgeId>(edges.size()), stubs[k], stubs[k + 1]});
        const Multigraph g(n, edges);
        const int truth = oracle::edge_connectivity_upto3(g);
        ++seen[std::min(truth, 4)];
        for (int k = 1; k <= 3; ++k) REQUIRE(edge_connectivity_at_least(g, k) == (truth >= k));
        if (truth <= 3) CHECK(edge_connectivity_by_flow(g) == truth);
    }
    CHECK(seen[0] > 0);
    CHECK(seen[3] > 0);
}

TEST_CASE("random generator is 3-edge-connected and deterministic") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = random_cubic(16, seed);
        CHECK(oracle::edge_connectivity_upto3(g) == 3);
        const auto h = random_cubic(16, seed);
        CHECK(g.edges().size() == h.edges().size());
        bool same = true;
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            same &= g.edge_at(i).u == h.edge_at(i).u && g.edge_at(i).v == h.edge_at(i).v;
        CHECK(same);
    }
    CHECK_THROWS_AS(random_cubic(7, 1), Error);
    CHECK_THROWS_AS(random_cubic(2, 1), Error);
    // Large instances pass the near-linear check.
    CHECK(edge_connectivity_at_least(random_cubic(100000, 5), 3));
}

TEST_CASE("named generators") {
    CHECK(oracle::edge_connectivity_upto3(petersen()) == 3);
    CHECK(oracle::edge_connectivity_upto3(k33()) == 3);
    CHECK(oracle::edge_connectivity_upto3(prism(5)) == 3);
    const auto t = truncate(k4());
    CHECK(t.vertex_count() == 12);
    CHECK(oracle::edge_connectivity_upto3(t) == 3);
    const auto s = three_sum(k4(), 0, petersen(), 3, {2, 0, 1});
    CHECK(s.vertex_count() == 12);
    CHECK(oracle::edge_connectivity_upto3(s) == 3);
}
