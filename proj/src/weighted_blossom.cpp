// Primal-dual weighted blossom algorithm (Edmonds, with Galil's bookkeeping),
// O(n^3). The structure follows the well-known mwmatching.py reference
// implementation closely: edges are addressed through "endpoints"
// p = 2k or 2k+1, vertex duals are stored doubled so that integer weights
// keep every quantity integral, and blossoms are numbered n .. 2n-1.

#include <algorithm>
#include <string>

#include "wsm/matching.hpp"

namespace wsm {

namespace {

class WeightedBlossom {
public:
    WeightedBlossom(const Multigraph& g, const std::vector<Weight>& weight, bool max_cardinality)
        : nv_(static_cast<int>(g.vertex_count())), ne_(static_cast<int>(g.edge_count())),
          max_cardinality_(max_cardinality) {
        ends_.resize(2 * static_cast<std::size_t>(ne_));
        weight_ = weight;
        neighbend_.resize(nv_);
        Weight max_weight = 0;
        for (int k = 0; k < ne_; ++k) {
            const Edge& e = g.edge_at(k);
            ends_[2 * k] = static_cast<int>(e.u);
            ends_[2 * k + 1] = static_cast<int>(e.v);
            neighbend_[e.u].push_back(2 * k + 1);
            neighbend_[e.v].push_back(2 * k);
            max_weight = std::max(max_weight, weight_[k]);
        }
        const int nb = 2 * nv_;
        mate_.assign(nv_, -1);
        label_.assign(nb, 0);
        labelend_.assign(nb, -1);
        inblossom_.resize(nv_);
        for (int v = 0; v < nv_; ++v) inblossom_[v] = v;
        blossomparent_.assign(nb, -1);
        blossomchilds_.assign(nb, {});
        blossombase_.assign(nb, -1);
        for (int v = 0; v < nv_; ++v) blossombase_[v] = v;
        blossomendps_.assign(nb, {});
        bestedge_.assign(nb, -1);
        blossombestedges_.assign(nb, {});
        has_bestedges_.assign(nb, 0);
        for (int b = nb - 1; b >= nv_; --b) unused_.push_back(b);
        dual_.assign(nb, 0);
        for (int v = 0; v < nv_; ++v) dual_[v] = max_weight;
        allowedge_.assign(ne_, 0);
    }

    std::vector<std::int64_t> run() {
        for (int stage = 0; stage < nv_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = nv_; b < 2 * nv_; ++b) {
                blossombestedges_[b].clear();
                has_bestedges_[b] = 0;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();
            for (int v = 0; v < nv_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

            bool augmented = false;
            for (;;) {
                while (!queue_.empty() && !augmented) {
                    const int v = queue_.back();
                    queue_.pop_back();
                    for (int p : neighbend_[v]) {
                        const int k = p / 2;
                        const int w = ends_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        Weight kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge_[k] = 1;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                const int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            const int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                int deltatype = -1;
                Weight delta = 0;
                int deltaedge = -1, deltablossom = -1;
                if (!max_cardinality_) {
                    deltatype = 1;
                    delta = *std::min_element(dual_.begin(), dual_.begin() + nv_);
                }
                for (int v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        const Weight d = slack(bestedge_[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nv_; ++b) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        const Weight ks = slack(bestedge_[b]);
                        WSM_CHECK(ks % 2 == 0, "odd slack between S-blossoms");
                        const Weight d = ks / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        (deltatype == -1 || dual_[b] < delta)) {
                        delta = dual_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    // Maximum cardinality reached; no further improvement.
                    deltatype = 1;
                    delta = std::max<Weight>(0, *std::min_element(dual_.begin(), dual_.begin() + nv_));
                }

                for (int v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 1) dual_[v] -= delta;
                    else if (label_[inblossom_[v]] == 2) dual_[v] += delta;
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) dual_[b] += delta;
                        else if (label_[b] == 2) dual_[b] -= delta;
                    }
                }

                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    int i = ends_[2 * deltaedge], j = ends_[2 * deltaedge + 1];
                    if (label_[inblossom_[i]] == 0) std::swap(i, j);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    queue_.push_back(ends_[2 * deltaedge]);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;

            for (int b = nv_; b < 2 * nv_; ++b)
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dual_[b] == 0)
                    expand_blossom(b, true);
        }

        std::vector<std::int64_t> slot_of(nv_, -1);
        for (int v = 0; v < nv_; ++v)
            if (mate_[v] >= 0) slot_of[v] = mate_[v] / 2;
        return slot_of;
    }

private:
    Weight slack(int k) const { return dual_[ends_[2 * k]] + dual_[ends_[2 * k + 1]] - 2 * weight_[k]; }

    void leaves(int b, std::vector<int>& out) const {
        if (b < nv_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) leaves(t, out);
    }
    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p) {
        for (;;) {
            const int b = inblossom_[w];
            label_[w] = label_[b] = t;
            labelend_[w] = labelend_[b] = p;
            bestedge_[w] = bestedge_[b] = -1;
            if (t == 1) {
                leaves(b, queue_);
                return;
            }
            // A T-blossom's base has a matched partner, which becomes S.
            const int base = blossombase_[b];
            WSM_CHECK(mate_[base] >= 0, "T-blossom base is unmatched");
            w = ends_[mate_[base]];
            t = 1;
            p = mate_[base] ^ 1;
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = ends_[labelend_[b]];
                b = inblossom_[v];
                v = ends_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = ends_[2 * k], w = ends_[2 * k + 1];
        const int bb = inblossom_[base];
        int bv = inblossom_[v], bw = inblossom_[w];
        WSM_CHECK(!unused_.empty(), "out of blossom ids");
        const int b = unused_.back();
        unused_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        auto& path = blossomchilds_[b];
        auto& endps = blossomendps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = ends_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = ends_[labelend_[bw]];
            bw = inblossom_[w];
        }
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dual_[b] = 0;
        for (int x : leaves(b)) {
            if (label_[inblossom_[x]] == 2) queue_.push_back(x);
            inblossom_[x] = b;
        }

        std::vector<int> bestedgeto(2 * nv_, -1);
        for (int sub : path) {
            std::vector<int> candidates;
            if (!has_bestedges_[sub]) {
                for (int x : leaves(sub))
                    for (int p : neighbend_[x]) candidates.push_back(p / 2);
            } else {
                candidates = blossombestedges_[sub];
            }
            for (int e : candidates) {
                int i = ends_[2 * e], j = ends_[2 * e + 1];
                if (inblossom_[j] == b) std::swap(i, j);
                const int bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(e) < slack(bestedgeto[bj])))
                    bestedgeto[bj] = e;
            }
            blossombestedges_[sub].clear();
            has_bestedges_[sub] = 0;
            bestedge_[sub] = -1;
        }
        auto& best = blossombestedges_[b];
        best.clear();
        for (int e : bestedgeto)
            if (e != -1) best.push_back(e);
        has_bestedges_[b] = 1;
        bestedge_[b] = -1;
        for (int e : best)
            if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b])) bestedge_[b] = e;
    }

    void expand_blossom(int b, bool endstage) {
        const std::vector<int> childs = blossomchilds_[b];
        for (int s : childs) {
            blossomparent_[s] = -1;
            if (s < nv_) {
                inblossom_[s] = s;
            } else if (endstage && dual_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int x : leaves(s)) inblossom_[x] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            const auto& ch = blossomchilds_[b];
            const auto& ep = blossomendps_[b];
            const int len = static_cast<int>(ch.size());
            auto at = [len](int j) { return ((j % len) + len) % len; };
            const int entrychild = inblossom_[ends_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
            int jstep, endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[ends_[p ^ 1]] = 0;
                label_[ends_[ep[at(j - endptrick)] ^ endptrick ^ 1]] = 0;
                assign_label(ends_[p ^ 1], 2, p);
                allowedge_[ep[at(j - endptrick)] / 2] = 1;
                j += jstep;
                p = ep[at(j - endptrick)] ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            int bv = ch[at(j)];
            label_[ends_[p ^ 1]] = label_[bv] = 2;
            labelend_[ends_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (ch[at(j)] != entrychild) {
                bv = ch[at(j)];
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int reached = -1;
                for (int x : leaves(bv))
                    if (label_[x] != 0) {
                        reached = x;
                        break;
                    }
                if (reached != -1) {
                    label_[reached] = 0;
                    label_[ends_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(reached, 2, labelend_[reached]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
        bestedge_[b] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= nv_) augment_blossom(t, v);
        auto& ch = blossomchilds_[b];
        auto& ep = blossomendps_[b];
        const int len = static_cast<int>(ch.size());
        auto at = [len](int j) { return ((j % len) + len) % len; };
        const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
        int j = i;
        int jstep, endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = ch[at(j)];
            const int p = ep[at(j - endptrick)] ^ endptrick;
            if (t >= nv_) augment_blossom(t, ends_[p]);
            j += jstep;
            t = ch[at(j)];
            if (t >= nv_) augment_blossom(t, ends_[p ^ 1]);
            mate_[ends_[p]] = p ^ 1;
            mate_[ends_[p ^ 1]] = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        std::rotate(ep.begin(), ep.begin() + i, ep.end());
        blossombase_[b] = blossombase_[ch[0]];
        WSM_CHECK(blossombase_[b] == v, "blossom base mismatch after augmentation");
    }

    void augment_matching(int k) {
        const int v = ends_[2 * k], w = ends_[2 * k + 1];
        for (auto [s0, p0] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
            int s = s0, p = p0;
            for (;;) {
                const int bs = inblossom_[s];
                if (bs >= nv_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                const int t = ends_[labelend_[bs]];
                const int bt = inblossom_[t];
                s = ends_[labelend_[bt]];
                const int j = ends_[labelend_[bt] ^ 1];
                if (bt >= nv_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int nv_, ne_;
    bool max_cardinality_;
    std::vector<int> ends_;
    std::vector<Weight> weight_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_, label_, labelend_, inblossom_, blossomparent_, blossombase_, bestedge_;
    std::vector<std::vector<int>> blossomchilds_, blossomendps_, blossombestedges_;
    std::vector<char> has_bestedges_;
    std::vector<int> unused_;
    std::vector<Weight> dual_;
    std::vector<char> allowedge_;
    std::vector<int> queue_;
};

}  // namespace

std::vector<std::int64_t> max_weight_matching_slots(const Multigraph& g, const std::vector<Weight>& weight_by_slot,
                                                    bool max_cardinality) {
    if (weight_by_slot.size() != g.edge_count())
        throw Error(ErrorCode::BadParameters, "one weight per edge expected");
    if (g.vertex_count() == 0) return {};
    return WeightedBlossom(g, weight_by_slot, max_cardinality).run();
}

Matching min_weight_perfect_matching(const Multigraph& g, const std::function<Weight(EdgeId)>& weight) {
    // Among maximum-cardinality matchings, maximising C - w minimises w.
    std::vector<Weight> w(g.edge_count());
    Weight top = 0;
    for (std::size_t s = 0; s < w.size(); ++s) {
        w[s] = weight(g.edge_at(s).id);
        if (w[s] < 0) throw Error(ErrorCode::BadParameters, "weights must be non-negative");
        top = std::max(top, w[s]);
    }
    for (auto& x : w) x = top + 1 - x;
    const auto slot_of = max_weight_matching_slots(g, w, true);
    Matching out;
    for (std::size_t v = 0; v < slot_of.size(); ++v) {
        if (slot_of[v] < 0)
            throw Error(ErrorCode::NoPerfectMatching, "vertex " + std::to_string(v) + " cannot be matched");
        const Edge& e = g.edge_at(static_cast<std::size_t>(slot_of[v]));
        if (e.u == v) out.push_back(e.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wsm
