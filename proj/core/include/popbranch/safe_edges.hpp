#pragma once

#include <span>
#include <vector>

#include "popbranch/augmented.hpp"

namespace popbranch {

// S(X): edges (u, v) inside X that are undominated among the edges of E[X]
// entering v and strictly dominate every edge entering v from outside X
// (root edges included).
EdgeSet safe_edges(const AugmentedDigraph& d, std::span<const VertexIndex> x);

// Same computation with a precomputed membership mask over all vertices of D.
EdgeSet safe_edges(const AugmentedDigraph& d, std::span<const VertexIndex> x, const std::vector<char>& in_x);

}  // namespace popbranch
