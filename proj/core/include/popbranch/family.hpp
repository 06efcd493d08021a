#pragma once

// Per-vertex reach sets X_v and the maximal family built from them.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "popbranch/augmented.hpp"

namespace popbranch {

// A broken structural guarantee of the solver; indicates a bug, never bad input.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class LaminarityViolation : public InternalError {
  public:
    using InternalError::InternalError;
};

struct ReachSet {
    VertexIndex vertex;
    // Fixpoint X_v.
    VertexSet members;
    // X_v^0 = V_G, X_v^1, ... down to the fixpoint (inclusive).
    std::vector<VertexSet> history;
};

// Iterates X <- vertices reachable from v in (X, S(X)) starting at X = V_G
// until v reaches all of X.
ReachSet compute_reach_set(const AugmentedDigraph& d, VertexIndex v);

std::vector<ReachSet> compute_reach_sets(const AugmentedDigraph& d);

// One maximal set X of the reach-set family.
struct FamilyMember {
    VertexSet members;
    EdgeSet safe;
    // Bottom component: the source strongly connected component of (X, S(X)).
    VertexSet bottom;
    // Minimum-weight vertices of the bottom component.
    VertexSet min_weight;
};

struct MaximalFamily {
    // Indexed by vertex.
    std::vector<ReachSet> reach;
    // Maximal sets, ordered by smallest vertex. They partition V_G.
    std::vector<FamilyMember> members;
    // Vertex -> index into members.
    std::vector<std::size_t> member_of;
};

// Selects the maximal reach sets and their bottom components. Throws
// LaminarityViolation if the reach sets are not nested as expected.
MaximalFamily maximal_family(const AugmentedDigraph& d, std::vector<ReachSet> reach_sets);

}  // namespace popbranch
