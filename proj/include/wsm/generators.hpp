#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "wsm/graph.hpp"

namespace wsm {

CubicGraph k4();
CubicGraph k33();
CubicGraph petersen();
// Two k-cycles a_i = i and b_i = k + i joined by rungs a_i b_i. k >= 3.
CubicGraph prism(std::size_t k);
// Every vertex v becomes the triangle 3v, 3v+1, 3v+2.
CubicGraph truncate(const CubicGraph& g);

// Random 3-edge-connected cubic graph on n vertices: start from K4 and
// repeatedly subdivide two distinct edges and join the new vertices, then
// relabel vertices and shuffle edge order. Deterministic in (n, seed) on
// every platform. Throws BadParameters for odd n or n < 4.
CubicGraph random_cubic(std::size_t n, std::uint64_t seed);

// Remove vertex x from g and vertex y from h and join their former
// neighbours by three new edges: neighbour i of x (in incidence order) to
// neighbour perm[i] of y. The result has a nontrivial 3-edge cut when both
// graphs have at least 4 vertices. g's vertices come first.
CubicGraph three_sum(const CubicGraph& g, VertexId x, const CubicGraph& h, VertexId y,
                     const std::array<int, 3>& perm);

// Uniform integer in [0, bound), identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace wsm
