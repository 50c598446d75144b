#pragma once

// DFS spanning tree plus random cut-space labels. Every back edge gets a
// random 128-bit label and every tree edge gets the XOR of the back edges
// that jump over it. A set of edges is an edge cut exactly when its labels
// XOR to zero, so bridges are the zero labels, 2-edge cuts are equal labels
// and 3-edge cuts are triples with a ^ b == c.

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <vector>

#include "wsm/graph.hpp"

namespace wsm::detail {

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Label {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    bool zero() const { return (hi | lo) == 0; }
    Label operator^(const Label& o) const { return {hi ^ o.hi, lo ^ o.lo}; }
    Label& operator^=(const Label& o) {
        hi ^= o.hi;
        lo ^= o.lo;
        return *this;
    }
    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;
};

struct LabelHash {
    std::size_t operator()(const Label& l) const noexcept {
        return static_cast<std::size_t>(l.lo ^ (l.hi * 0x9e3779b97f4a7c15ULL));
    }
};

struct SpanningDfs {
    VertexId root = 0;
    bool spans = false;  // false when the graph is disconnected
    std::vector<std::uint32_t> parent;       // kNone at the root
    std::vector<std::uint32_t> parent_slot;  // slot of the tree edge above v
    std::vector<std::uint32_t> depth;
    std::vector<std::uint32_t> pre;    // vertex -> preorder index
    std::vector<std::uint32_t> order;  // preorder index -> vertex
    std::vector<std::uint32_t> size;   // subtree sizes
    std::vector<std::uint32_t> back_slots;
    // Indexed by slot; kNone for tree edges. `lower` is the deeper end.
    std::vector<std::uint32_t> back_lower;
    std::vector<std::uint32_t> back_upper;

    bool is_tree_slot(std::uint32_t slot) const { return back_lower[slot] == kNone; }
    bool is_ancestor(std::uint32_t a, std::uint32_t d) const {
        return pre[a] <= pre[d] && pre[d] < pre[a] + size[a];
    }
};

SpanningDfs spanning_dfs(const Multigraph& g, VertexId root);

// Labels indexed by edge slot.
std::vector<Label> cut_space_labels(const Multigraph& g, const SpanningDfs& t, std::uint64_t seed);

// Connectivity of g with the given slots removed.
bool connected_without(const Multigraph& g, std::initializer_list<std::uint32_t> removed);

}  // namespace wsm::detail
