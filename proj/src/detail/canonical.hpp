#pragma once

#include <utility>
#include <vector>

#include "wsm/cut_model.hpp"

namespace wsm::detail {

// Renumbers an arbitrary cactus tree into the canonical form described on
// CactusModel. `leaf_of_vertex[v]` is the raw node holding vertex v.
CactusModel canonical_model(std::size_t node_count, const std::vector<std::pair<NodeId, NodeId>>& edges,
                            const std::vector<NodeId>& leaf_of_vertex);

}  // namespace wsm::detail
