#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wsm/graph.hpp"
#include "wsm/matching.hpp"

namespace oracle {

using Triple = std::array<wsm::EdgeId, 3>;

// Smallest edge cut size found by deleting every set of at most 3 edges and
// checking connectivity by BFS. Returns 4 when nothing of size <= 3 works.
int edge_connectivity_upto3(const wsm::Multigraph& g);

// All 3-edge cuts via plain subset loops (no Gray code). n <= 16.
std::set<Triple> three_cuts(const wsm::Multigraph& g);

// Every perfect matching, by branching on the lowest uncovered vertex.
std::vector<wsm::Matching> perfect_matchings(const wsm::Multigraph& g);

// |M ∩ δ(S)| == 1 for every 3-edge cut, using three_cuts.
bool well_spread(const wsm::Multigraph& g, const wsm::Matching& m);

std::size_t intersection_size(const wsm::Matching& a, const wsm::Matching& b);

// Mixed corpus of 3-edge-connected cubic graphs with at most max_n vertices:
// named small graphs glued by 3-sums (many nontrivial cuts) and random
// insertion graphs (few cuts). Always returns a graph.
wsm::CubicGraph corpus_graph(std::mt19937_64& rng, std::size_t max_n);

// Same graph with vertices renamed by a random permutation and edges
// shuffled; ids are new positions. `edge_map[old id] = new id`.
wsm::CubicGraph relabel(const wsm::CubicGraph& g, std::mt19937_64& rng, std::vector<wsm::EdgeId>* edge_map);

}  // namespace oracle
