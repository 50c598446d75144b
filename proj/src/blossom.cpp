// Edmonds' blossom algorithm for maximum-cardinality matching.
//
// Searches grow one alternating tree at a time. Blossom bases live in a
// disjoint-set forest, so contracting a blossom costs time proportional to
// its boundary path, and all per-search state is reset only on the vertices
// the search touched. The search is seeded with a Karp-Sipser style greedy
// matching (forced degree-1 choices first), which on cubic graphs leaves
// very few vertices for the searches to fix.

#include <algorithm>
#include <string>

#include "wsm/matching.hpp"

namespace wsm {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

class CardinalityBlossom {
public:
    CardinalityBlossom(const Multigraph& g, const std::vector<char>& blocked)
        : g_(g), n_(static_cast<std::uint32_t>(g.vertex_count())), blocked_(blocked),
          mate_(n_, kNone), mate_slot_(n_, kNone), parent_(n_, kNone), parent_slot_(n_, kNone),
          base_(n_), state_(n_, kUnseen), mark_(n_, 0) {
        if (blocked_.empty()) blocked_.assign(n_, 0);
        for (std::uint32_t v = 0; v < n_; ++v) base_[v] = v;
    }

    Matching run() {
        greedy();
        for (std::uint32_t root = 0; root < n_; ++root) {
            if (mate_[root] != kNone || blocked_[root]) continue;
            const std::uint32_t end = search(root);
            if (end != kNone) augment(end);
            reset();
        }
        Matching out;
        for (std::uint32_t v = 0; v < n_; ++v)
            if (mate_[v] != kNone && v < mate_[v]) out.push_back(g_.edge_at(mate_slot_[v]).id);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    enum : char { kUnseen, kEven, kOdd };

    bool available(std::uint32_t v) const { return !blocked_[v] && mate_[v] == kNone; }

    void greedy() {
        std::vector<std::uint32_t> degree(n_, 0), forced;
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (blocked_[v]) continue;
            for (std::uint32_t s : g_.incident(v)) degree[v] += !blocked_[g_.other_end(s, v)];
            if (degree[v] == 1) forced.push_back(v);
        }
        auto take = [&](std::uint32_t v, std::uint32_t w, std::uint32_t slot) {
            match(v, w, slot);
            for (std::uint32_t z : {v, w})
                for (std::uint32_t s : g_.incident(z)) {
                    const std::uint32_t t = g_.other_end(s, z);
                    if (available(t) && --degree[t] == 1) forced.push_back(t);
                }
        };
        std::uint32_t cursor = 0;
        for (;;) {
            std::uint32_t v = kNone;
            while (!forced.empty() && v == kNone) {
                const std::uint32_t c = forced.back();
                forced.pop_back();
                if (available(c) && degree[c] == 1) v = c;
            }
            while (v == kNone && cursor < n_) {
                if (available(cursor) && degree[cursor] > 0) v = cursor;
                ++cursor;
            }
            if (v == kNone) break;
            // Prefer the partner with fewest options left.
            std::uint32_t best = kNone, best_slot = kNone;
            for (std::uint32_t s : g_.incident(v)) {
                const std::uint32_t w = g_.other_end(s, v);
                if (available(w) && (best == kNone || degree[w] < degree[best])) {
                    best = w;
                    best_slot = s;
                }
            }
            take(v, best, best_slot);
        }
    }

    void match(std::uint32_t a, std::uint32_t b, std::uint32_t slot) {
        mate_[a] = b;
        mate_[b] = a;
        mate_slot_[a] = mate_slot_[b] = slot;
    }

    std::uint32_t find(std::uint32_t x) {
        while (base_[x] != x) {
            base_[x] = base_[base_[x]];
            x = base_[x];
        }
        return x;
    }

    void label(std::uint32_t v, char s) {
        if (state_[v] == kUnseen) touched_.push_back(v);
        state_[v] = s;
        if (s == kEven) queue_.push_back(v);
    }

    void reset() {
        for (std::uint32_t v : touched_) {
            state_[v] = kUnseen;
            parent_[v] = parent_slot_[v] = kNone;
            base_[v] = v;
        }
        touched_.clear();
        queue_.clear();
    }

    // First common blossom base on the two tree paths, stepping alternately.
    std::uint32_t lca(std::uint32_t a, std::uint32_t b) {
        ++stamp_;
        a = find(a);
        b = find(b);
        for (;; std::swap(a, b)) {
            if (a == kNone) continue;
            if (mark_[a] == stamp_) return a;
            mark_[a] = stamp_;
            a = mate_[a] == kNone ? kNone : find(parent_[mate_[a]]);
        }
    }

    // Walk from x up to base b, pointing even vertices across the new
    // blossom edge and turning odd vertices even.
    void shrink(std::uint32_t x, std::uint32_t y, std::uint32_t slot, std::uint32_t b) {
        while (find(x) != b) {
            parent_[x] = y;
            parent_slot_[x] = slot;
            y = mate_[x];
            if (state_[y] == kOdd) label(y, kEven);
            if (find(x) == x) base_[x] = b;
            if (find(y) == y) base_[y] = b;
            slot = parent_slot_[y];
            x = parent_[y];
        }
    }

    // Returns a free vertex reached by an augmenting path, or kNone.
    std::uint32_t search(std::uint32_t root) {
        label(root, kEven);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const std::uint32_t x = queue_[head];
            for (std::uint32_t slot : g_.incident(x)) {
                const std::uint32_t y = g_.other_end(slot, x);
                if (blocked_[y] || y == mate_[x]) continue;
                if (state_[y] == kUnseen) {
                    label(y, kOdd);
                    parent_[y] = x;
                    parent_slot_[y] = slot;
                    if (mate_[y] == kNone) return y;
                    label(mate_[y], kEven);
                } else if (state_[y] == kEven && find(x) != find(y)) {
                    const std::uint32_t b = lca(x, y);
                    shrink(x, y, slot, b);
                    shrink(y, x, slot, b);
                }
            }
        }
        return kNone;
    }

    void augment(std::uint32_t y) {
        while (y != kNone) {
            const std::uint32_t x = parent_[y];
            const std::uint32_t next = mate_[x];
            match(x, y, parent_slot_[y]);
            y = next;
        }
    }

    const Multigraph& g_;
    std::uint32_t n_;
    std::vector<char> blocked_;
    std::vector<std::uint32_t> mate_, mate_slot_, parent_, parent_slot_, base_;
    std::vector<char> state_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    std::vector<std::uint32_t> touched_, queue_;
};

}  // namespace

bool is_perfect_matching(const Multigraph& g, std::span<const EdgeId> m) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (EdgeId id : m) {
        if (!g.has_edge(id)) return false;
        const Edge& e = g.edge(id);
        if (covered[e.u] || covered[e.v]) return false;
        covered[e.u] = covered[e.v] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

Matching maximum_matching(const Multigraph& g, const std::vector<char>& blocked) {
    return CardinalityBlossom(g, blocked).run();
}

Matching perfect_matching(const Multigraph& g) {
    Matching m = maximum_matching(g);
    if (2 * m.size() != g.vertex_count())
        throw Error(ErrorCode::NoPerfectMatching, "maximum matching has " + std::to_string(m.size()) + " edges for " +
                                                      std::to_string(g.vertex_count()) + " vertices");
    return m;
}

Matching perfect_matching_containing(const Multigraph& g, EdgeId e) {
    const Edge& forced = g.edge(e);
    std::vector<char> blocked(g.vertex_count(), 0);
    blocked[forced.u] = blocked[forced.v] = 1;
    Matching m = maximum_matching(g, blocked);
    if (2 * (m.size() + 1) != g.vertex_count())
        throw Error(ErrorCode::NoPerfectMatching, "no perfect matching contains edge " + std::to_string(e));
    m.insert(std::upper_bound(m.begin(), m.end(), e), e);
    return m;
}

}  // namespace wsm
