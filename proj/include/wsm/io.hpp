#pragma once

#include <iosfwd>
#include <string>

#include "wsm/graph.hpp"
#include "wsm/matching.hpp"

namespace wsm {

// Graph files: a header line "n m", then m lines "u v". Lines starting with
// '#' and blank lines are ignored. Edge ids are line positions.
// Throws ParseError on malformed text, and NotCubic, LoopFound or OddOrder
// from graph construction.
CubicGraph read_graph(std::istream& in);
CubicGraph read_graph_file(const std::string& path);
std::string format_graph(const Multigraph& g);

// Matching files: one edge id per line, ascending.
Matching read_matching(std::istream& in);
Matching read_matching_file(const std::string& path);
std::string format_matching(const Matching& m);

}  // namespace wsm
