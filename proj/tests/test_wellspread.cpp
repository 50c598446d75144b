#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wsm/cut_model.hpp"
#include "wsm/generators.hpp"
#include "wsm/wellspread.hpp"

using namespace wsm;

namespace {

std::size_t meet(const Matching& m, const std::array<EdgeId, 3>& cut) {
    std::size_t k = 0;
    for (EdgeId e : cut) k += std::binary_search(m.begin(), m.end(), e);
    return k;
}

}  // namespace

TEST_CASE("every perfect matching meets a 3-edge cut an odd number of times") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        const auto g = oracle::corpus_graph(rng, 14);
        const auto cuts = oracle::three_cuts(g);
        for (const auto& m : oracle::perfect_matchings(g))
            for (const auto& c : cuts) {
                const auto k = meet(m, c);
                REQUIRE((k == 1 || k == 3));
            }
    }
}

TEST_CASE("decomposition pieces are cubic and cover each edge once") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 80; ++i) {
        const auto g = oracle::corpus_graph(rng, 22);
        const auto m = build_cactus(g);
        const auto plan = decompose(g, m);
        CHECK(plan.edge_count == g.edge_count());
        CHECK(plan.records.size() + 1 == m.node_count() - g.vertex_count());

        std::vector<int> covered(g.edge_count(), 0);
        std::set<NodeId> done;
        for (const auto& r : plan.records) {
            CHECK(m.kind(r.node) == NodeKind::Empty);
            CHECK(r.hub_in_piece == r.members.size());
            CHECK(r.piece.degree(r.hub_in_piece) == 3);
            CHECK(std::is_sorted(r.cut.begin(), r.cut.end()));
            // The hub's edges are exactly the cut, with original ids.
            std::vector<EdgeId> at_hub;
            for (auto s : r.piece.incident(r.hub_in_piece)) at_hub.push_back(r.piece.edge_at(s).id);
            std::sort(at_hub.begin(), at_hub.end());
            CHECK(std::equal(at_hub.begin(), at_hub.end(), r.cut.begin()));
            // Children come before parents.
            for (NodeId c : r.members)
                if (m.kind(c) == NodeKind::Empty) CHECK(done.count(c) == 1);
            done.insert(r.node);
            for (const auto& e : r.piece.edges())
                if (e.u != r.hub_in_piece && e.v != r.hub_in_piece) ++covered[e.id];
            CHECK(oracle::edge_connectivity_upto3(r.piece) == 3);
        }
        for (const auto& e : plan.final_graph.edges()) ++covered[e.id];
        CHECK(std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("assembled matchings are well spread") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 150; ++i) {
        const auto g = oracle::corpus_graph(rng, 20);
        const auto M = well_spread_matching(g);
        REQUIRE(is_perfect_matching(g, M));
        REQUIRE(oracle::well_spread(g, M));
        const auto verdict = is_well_spread(g, M, build_cactus(g));
        CHECK(verdict.perfect);
        CHECK(verdict.well_spread);
        CHECK(verdict.violations.empty());
    }
}

TEST_CASE("verifier agrees with the oracle on every perfect matching") {
    std::mt19937_64 rng(31);
    std::size_t good = 0, bad = 0;
    for (int i = 0; i < 40; ++i) {
        const auto g = oracle::corpus_graph(rng, 14);
        const auto m = build_cactus(g);
        for (const auto& M : oracle::perfect_matchings(g)) {
            const bool truth = oracle::well_spread(g, M);
            REQUIRE(is_well_spread(g, M, m).well_spread == truth);
            ++(truth ? good : bad);
        }
    }
    CHECK(good > 0);
    CHECK(bad > 0);
}

TEST_CASE("prism matching on all rungs violates the side cuts") {
    const auto g = prism(3);
    const Matching rungs{6, 7, 8};
    const auto v = is_well_spread(g, rungs, build_cactus(g));
    CHECK(v.perfect);
    CHECK_FALSE(v.well_spread);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].intersection == 3);
    CHECK(v.violations[0].cut_edges == std::array<EdgeId, 3>{6, 7, 8});

    const auto not_perfect = is_well_spread(g, Matching{6, 7}, build_cactus(g));
    CHECK_FALSE(not_perfect.perfect);
    CHECK_FALSE(not_perfect.well_spread);
}

TEST_CASE("decompose rejects a model of another graph") {
    const auto g = prism(3);
    // Star cactus: valid shape for 6 vertices, but misses the rung cut.
    std::vector<std::pair<NodeId, NodeId>> star;
    for (NodeId v = 0; v < 6; ++v) star.emplace_back(v, 6);
    std::vector<VertexId> phi{0, 1, 2, 3, 4, 5};
    const CactusModel wrong(7, star, phi, 6);
    // Structural validation cannot notice a missing cut, so this is accepted.
    CHECK_NOTHROW(decompose(g, wrong));
    const CactusModel petersen_model = build_cactus(petersen());
    try {
        decompose(g, petersen_model);
        FAIL("expected ModelMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ModelMismatch);
    }
}

TEST_CASE("large instances") {
    for (std::uint64_t seed : {1u, 2u}) {
        const auto g = random_cubic(20000, seed);
        const auto m = build_cactus(g);
        const auto M = assemble(decompose(g, m));
        const auto v = is_well_spread(g, M, m);
        CHECK(v.perfect);
        CHECK(v.well_spread);
    }
    CHECK_THROWS_AS(well_spread_matching(build_graph(4, std::vector<std::pair<VertexId, VertexId>>{
                                                             {0, 1}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 3}})),
                    Error);
}
