#pragma once

#include <cstddef>

#include "wsm/graph.hpp"
#include "wsm/matching.hpp"

namespace wsm {

struct MatchingPair {
    Matching m1;      // well-spread
    Matching m2;      // fewest edges in common with m1
    Matching shared;  // m1 ∩ m2
    std::size_t bound = 0;  // floor(n / 10)
};

// Throws NotThreeEdgeConnected, and BoundViolated if |m1 ∩ m2| > floor(n/10).
MatchingPair small_intersection_pair(const CubicGraph& g);

}  // namespace wsm
