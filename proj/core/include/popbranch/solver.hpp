#pragma once

// Popular arborescence search: reach sets, the maximal family, the
// nonexistence test on bottom components, the contracted digraph over the
// maximal sets, and expansion of its arborescence back to D.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "popbranch/augmented.hpp"
#include "popbranch/certificate.hpp"
#include "popbranch/family.hpp"

namespace popbranch {

// Evidence that a minimum-weight bottom vertex can be entered more cheaply:
// a lighter vertex s in X outside the bottom component and an unsafe edge f
// into `vertex` that beats every edge entering `vertex` from outside X and
// lets s reach `vertex` through S(X) + f.
struct CheaperEntryWitness {
    VertexIndex vertex;
    VertexIndex s;
    EdgeIndex f;

    friend bool operator==(const CheaperEntryWitness&, const CheaperEntryWitness&) = default;
};

// Candidates s are tried by weight then index, edges f by index.
std::optional<CheaperEntryWitness> find_cheaper_entry(const AugmentedDigraph& d, const FamilyMember& member,
                                          VertexIndex v_prime);

struct ContractedArc {
    // Member index, or ContractedDigraph::root_node() for r.
    std::size_t from;
    std::size_t to;
    // Originating edge of D.
    EdgeIndex payload;
};

struct ContractedDigraph {
    std::size_t member_count = 0;
    std::vector<ContractedArc> arcs;

    std::size_t root_node() const noexcept { return member_count; }
};

struct NoAdmissibleEntry {
    std::size_t member;
    VertexSet set;
    VertexSet min_weight;
    std::vector<CheaperEntryWitness> witnesses;

    friend bool operator==(const NoAdmissibleEntry&, const NoAdmissibleEntry&) = default;
};

struct NoArborescenceInContracted {
    friend bool operator==(const NoArborescenceInContracted&, const NoArborescenceInContracted&) = default;
};

using NoneReason = std::variant<NoAdmissibleEntry, NoArborescenceInContracted>;

// Returns the contracted digraph, or the first maximal set whose every
// minimum-weight bottom vertex has a CheaperEntryWitness. Arcs enter only bottom
// vertices of minimum weight without a witness, and only through edges not
// strictly dominated by another edge entering the set at the same vertex.
std::variant<ContractedDigraph, NoAdmissibleEntry> build_contracted(const AugmentedDigraph& d,
                                                               const MaximalFamily& family);

// BFS from the root; each node takes the first arc that discovers it, with
// arcs scanned in payload order. Returns the chosen arc index per member, or
// nullopt if some member is unreachable.
std::optional<std::vector<std::size_t>> find_r_arborescence(const ContractedDigraph& contracted);

// Lifts the contracted arborescence to D: the payload edges plus, for each
// entered vertex v with |X_v| >= 2, a BFS v-arborescence of (X_v, S(X_v)).
Arborescence expand(const AugmentedDigraph& d, const MaximalFamily& family, const ContractedDigraph& contracted,
                    const std::vector<std::size_t>& chosen_arcs);

struct PopularFound {
    Arborescence arborescence;
    DualSolution certificate;
    bool certificate_verified = false;
    MaximalFamily family;
};

struct NoneExists {
    NoneReason reason;
    MaximalFamily family;
};

struct AssumptionViolated {
    WeightTriple triple;
};

using SolveOutcome = std::variant<PopularFound, NoneExists, AssumptionViolated>;

struct SolveOptions {
    // Run even if the weight assumption fails.
    bool force = false;
};

SolveOutcome solve(const AugmentedDigraph& d, const SolveOptions& options = {});

}  // namespace popbranch
