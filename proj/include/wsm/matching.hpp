#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "wsm/graph.hpp"

namespace wsm {

// Edge ids, ascending.
using Matching = std::vector<EdgeId>;
using Weight = std::int64_t;

bool is_perfect_matching(const Multigraph& g, std::span<const EdgeId> m);

// Maximum-cardinality matching (Edmonds' blossom algorithm). Vertices with
// blocked[v] set are left out. Returned ids are ascending.
Matching maximum_matching(const Multigraph& g, const std::vector<char>& blocked = {});

// Throws NoPerfectMatching.
Matching perfect_matching(const Multigraph& g);

// A perfect matching that uses edge e. Throws UnknownEdge, NoPerfectMatching.
Matching perfect_matching_containing(const Multigraph& g, EdgeId e);

// Perfect matching of least total weight (primal-dual weighted blossom,
// O(n^3)). Throws NoPerfectMatching.
Matching min_weight_perfect_matching(const Multigraph& g, const std::function<Weight(EdgeId)>& weight);

// Maximum-weight matching over all matchings, or over maximum-cardinality
// matchings when `max_cardinality` is set. Returns, per vertex, the slot of
// its matched edge or -1.
std::vector<std::int64_t> max_weight_matching_slots(const Multigraph& g, const std::vector<Weight>& weight_by_slot,
                                                    bool max_cardinality);

}  // namespace wsm
