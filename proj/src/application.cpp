#include "wsm/application.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "wsm/wellspread.hpp"

namespace wsm {

MatchingPair small_intersection_pair(const CubicGraph& g) {
    MatchingPair out;
    out.m1 = well_spread_matching(g);
    out.m2 = min_weight_perfect_matching(
        g, [&](EdgeId e) -> Weight { return std::binary_search(out.m1.begin(), out.m1.end(), e) ? 1 : 0; });
    std::set_intersection(out.m1.begin(), out.m1.end(), out.m2.begin(), out.m2.end(), std::back_inserter(out.shared));
    out.bound = g.vertex_count() / 10;
    if (out.shared.size() > out.bound)
        throw Error(ErrorCode::BoundViolated, "|M1 ∩ M2| = " + std::to_string(out.shared.size()) + " exceeds floor(n/10) = " +
                                                  std::to_string(out.bound));
    return out;
}

}  // namespace wsm
