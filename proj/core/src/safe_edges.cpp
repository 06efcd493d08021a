#include "popbranch/safe_edges.hpp"

#include <algorithm>
#include <limits>

namespace popbranch {

EdgeSet safe_edges(const AugmentedDigraph& d, std::span<const VertexIndex> x) {
    std::vector<char> in_x(d.graph().vertex_count(), 0);
    for (VertexIndex v : x) in_x[v] = 1;
    return safe_edges(d, x, in_x);
}

EdgeSet safe_edges(const AugmentedDigraph& d, std::span<const VertexIndex> x, const std::vector<char>& in_x) {
    const Digraph& g = d.graph();
    constexpr Rank none = std::numeric_limits<Rank>::max();
    EdgeSet result;
    for (VertexIndex v : x) {
        Rank best_inside = none;
        Rank best_boundary = none;
        for (EdgeIndex e : g.in_edges(v)) {
            Rank r = g.rank(e);
            if (in_x[g.edge(e).src])
                best_inside = std::min(best_inside, r);
            else
                best_boundary = std::min(best_boundary, r);
        }
        if (best_inside == none || best_inside >= best_boundary) continue;
        for (EdgeIndex e : g.in_edges(v))
            if (in_x[g.edge(e).src] && g.rank(e) == best_inside) result.push_back(e);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace popbranch
