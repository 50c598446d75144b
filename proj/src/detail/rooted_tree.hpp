#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace wsm::detail {

// A tree given as an edge list, rooted at `root`, with binary-lifting LCA.
// parent_edge[x] is the index of the edge joining x to its parent.
class RootedTree {
public:
    RootedTree(std::size_t node_count, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
               std::uint32_t root);

    std::uint32_t root() const { return root_; }
    const std::vector<std::uint32_t>& parent() const { return parent_; }
    const std::vector<std::uint32_t>& parent_edge() const { return parent_edge_; }
    const std::vector<std::uint32_t>& depth() const { return depth_; }
    // BFS order; parents come before children.
    const std::vector<std::uint32_t>& order() const { return order_; }
    // The endpoint of edge i farther from the root.
    std::uint32_t lower_end(std::size_t i) const { return lower_end_[i]; }

    std::uint32_t lca(std::uint32_t a, std::uint32_t b) const;

private:
    std::uint32_t root_;
    std::vector<std::uint32_t> parent_, parent_edge_, depth_, order_, lower_end_;
    std::vector<std::vector<std::uint32_t>> up_;
};

}  // namespace wsm::detail
