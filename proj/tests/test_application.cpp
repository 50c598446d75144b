#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "wsm/application.hpp"
#include "wsm/generators.hpp"

using namespace wsm;

namespace {

// Smallest |M1 ∩ M| over all perfect matchings M, by enumeration.
std::size_t brute_min_shared(const CubicGraph& g, const Matching& m1) {
    std::size_t best = SIZE_MAX;
    for (const auto& m : oracle::perfect_matchings(g)) best = std::min(best, oracle::intersection_size(m1, m));
    return best;
}

void check_pair(const CubicGraph& g, const MatchingPair& p) {
    REQUIRE(is_perfect_matching(g, p.m1));
    REQUIRE(is_perfect_matching(g, p.m2));
    CHECK(oracle::intersection_size(p.m1, p.m2) == p.shared.size());
    CHECK(p.bound == g.vertex_count() / 10);
    CHECK(p.shared.size() <= p.bound);
}

}  // namespace

TEST_CASE("named graphs") {
    const auto pk4 = small_intersection_pair(k4());
    check_pair(k4(), pk4);
    CHECK(pk4.shared.empty());

    const auto pp = small_intersection_pair(petersen());
    check_pair(petersen(), pp);
    CHECK(pp.shared.size() == 1);
    CHECK(oracle::well_spread(petersen(), pp.m1));
}

TEST_CASE("second matching attains the brute-force minimum") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 120; ++i) {
        const auto g = oracle::corpus_graph(rng, 12);
        const auto p = small_intersection_pair(g);
        check_pair(g, p);
        CHECK(oracle::well_spread(g, p.m1));
        CHECK(p.shared.size() == brute_min_shared(g, p.m1));
    }
}

TEST_CASE("bound holds on larger random graphs") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto g = random_cubic(400, seed);
        check_pair(g, small_intersection_pair(g));
    }
}

TEST_CASE("pair rejects graphs that are not 3-edge-connected") {
    // Two K4s, each missing one edge, joined across by two edges.
    const auto g = build_graph(8, std::vector<std::pair<VertexId, VertexId>>{
                                      {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3},
                                      {4, 6}, {5, 6}, {4, 7}, {5, 7}, {6, 7}, {0, 4}, {1, 5}});
    try {
        small_intersection_pair(g);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotThreeEdgeConnected);
    }
}
